#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ffd/detector.hpp"
#include "ffd/eval.hpp"
#include "ffd/homography.hpp"
#include "ffd/keypoint_io.hpp"
#include "ffd/kernel_math.hpp"
#include "ffd/pgm_io.hpp"
#include "ffd/png_io.hpp"
#include "ffd/scale_space.hpp"

namespace {

ffd::GrayImage load_image(const std::string& path)
{
    std::string ext = std::filesystem::path(path).extension().string();
    for (char& c : ext)
        c = static_cast<char>(std::tolower(c));
    if (ext == ".png")
        return ffd::read_png(path);
    return ffd::read_pgm(path);
}

void write_text(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error(path + ": cannot open for writing");
    out << text;
    if (!out)
        throw std::runtime_error(path + ": write failed");
}

std::vector<std::pair<int, int>> parse_sizes(const std::string& spec)
{
    std::vector<std::pair<int, int>> sizes;
    std::istringstream in(spec);
    std::string token;
    while (std::getline(in, token, ','))
    {
        std::size_t x = token.find('x');
        if (x == std::string::npos)
        {
            int side = std::stoi(token);
            sizes.emplace_back(side, side);
        }
        else
        {
            sizes.emplace_back(std::stoi(token.substr(0, x)),
                               std::stoi(token.substr(x + 1)));
        }
    }
    return sizes;
}

int run(int argc, char** argv)
{
    CLI::App app{"FFD multiscale keypoint detector"};
    app.require_subcommand(1);

    // detect
    auto* detect_cmd = app.add_subcommand("detect", "Detect keypoints in an image");
    std::string in_path, out_path, format = "json";
    ffd::DetectorParams params;
    detect_cmd->add_option("--input", in_path, "input image (PGM or PNG)")->required();
    detect_cmd->add_option("--output", out_path, "output keypoint file")->required();
    detect_cmd->add_option("--scales", params.n, "scale levels N");
    detect_cmd->add_option("--sigma0", params.sigma0, "presmooth width");
    detect_cmd->add_option("--contrast", params.tau_lc, "contrast threshold");
    detect_cmd->add_option("--tau-plus", params.tau_plus, "anisotropy lower threshold");
    detect_cmd->add_option("--tau-minus", params.tau_minus, "anisotropy upper threshold");
    detect_cmd->add_option("--max-keypoints", params.max_keypoints, "keep at most this many");
    detect_cmd->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    detect_cmd->callback([&] {
        ffd::GrayImage img = load_image(in_path);
        std::vector<ffd::Keypoint> kps = ffd::detect(img, params);
        ffd::write_keypoints(kps, ffd::parse_keypoint_format(format), out_path);
        std::cout << kps.size() << " keypoints -> " << out_path << "\n";
    });

    // pyramid
    auto* pyr_cmd = app.add_subcommand("pyramid", "Dump scale-space levels as PGM");
    std::string pyr_in, pyr_outdir;
    int pyr_scales = 3;
    pyr_cmd->add_option("--input", pyr_in, "input image")->required();
    pyr_cmd->add_option("--outdir", pyr_outdir, "output directory")->required();
    pyr_cmd->add_option("--scales", pyr_scales, "scale levels N");
    pyr_cmd->callback([&] {
        ffd::GrayImage img = load_image(pyr_in);
        ffd::ScaleSpace space = ffd::build_scale_space(img, pyr_scales);
        std::filesystem::create_directories(pyr_outdir);
        for (std::size_t j = 0; j < space.coarse.size(); ++j)
            ffd::write_pgm(space.coarse[j],
                           pyr_outdir + "/coarse_" + std::to_string(j) + ".pgm");
        for (std::size_t j = 0; j < space.fine.size(); ++j)
            ffd::write_pgm_normalized(space.fine[j],
                                      pyr_outdir + "/fine_" + std::to_string(j) + ".pgm");
        std::cout << space.coarse.size() << " coarse + " << space.fine.size()
                  << " fine levels -> " << pyr_outdir << "\n";
    });

    // analyze-kernel
    auto* ak_cmd = app.add_subcommand("analyze-kernel", "Constraint map and DoG profiles");
    std::string ak_out, ak_profiles;
    ak_cmd->add_option("--out", ak_out, "constraint-map CSV path")->required();
    ak_cmd->add_option("--profiles", ak_profiles, "optional DoG profile CSV path");
    ak_cmd->callback([&] {
        std::vector<double> mus = {1.26, 1.6, 2.0, 2.5, 3.0};
        std::vector<double> lambdas;
        for (double l = 0.05; l < 0.9005; l += 0.05)
            lambdas.push_back(l);
        lambdas.push_back(0.3135);
        write_text(ak_out, ffd::kernel_analysis_csv(mus, lambdas));
        std::cout << "constraint map -> " << ak_out << "\n";
        if (!ak_profiles.empty())
        {
            write_text(ak_profiles, ffd::dog_profile_csv(mus));
            std::cout << "profiles -> " << ak_profiles << "\n";
        }
    });

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "Evaluation experiments");
    eval_cmd->require_subcommand(1);

    auto* rep_cmd = eval_cmd->add_subcommand("repeatability",
                                             "Repeatability under a homography");
    std::string rep_image, rep_h;
    double rep_eps = 2.0;
    rep_cmd->add_option("--image", rep_image, "input image")->required();
    rep_cmd->add_option("--homography", rep_h, "9-value homography file")->required();
    rep_cmd->add_option("--epsilon", rep_eps, "match tolerance, pixels");
    rep_cmd->callback([&] {
        ffd::GrayImage img = load_image(rep_image);
        ffd::Homography h = ffd::read_homography(rep_h);
        ffd::WarpResult warped = ffd::warp_image(img, h);
        ffd::DetectorParams p;
        std::vector<ffd::Keypoint> a = ffd::detect(img, p);
        std::vector<ffd::Keypoint> b = ffd::detect(warped.image, p);
        ffd::RepeatabilityReport r = ffd::repeatability(
            a, b, h, rep_eps, warped.image.width, warped.image.height, &warped.valid);
        std::cout << "score,matched,total_a,total_b,epsilon\n"
                  << r.score << ',' << r.matched << ',' << r.total_a << ','
                  << r.total_b << ',' << r.epsilon << "\n";
    });

    auto* noise_cmd = eval_cmd->add_subcommand("noise", "Repeatability under noise");
    std::string noise_image, noise_out;
    unsigned noise_seed = 7;
    noise_cmd->add_option("--image", noise_image, "input image")->required();
    noise_cmd->add_option("--out", noise_out, "output CSV")->required();
    noise_cmd->add_option("--seed", noise_seed, "noise seed");
    noise_cmd->callback([&] {
        ffd::GrayImage img = load_image(noise_image);
        write_text(noise_out, ffd::noise_sweep_csv(img, ffd::DetectorParams{}, noise_seed));
        std::cout << "noise sweep -> " << noise_out << "\n";
    });

    auto* blur_cmd = eval_cmd->add_subcommand("blur", "Repeatability under box blur");
    std::string blur_image, blur_out;
    blur_cmd->add_option("--image", blur_image, "input image")->required();
    blur_cmd->add_option("--out", blur_out, "output CSV")->required();
    blur_cmd->callback([&] {
        ffd::GrayImage img = load_image(blur_image);
        write_text(blur_out, ffd::blur_sweep_csv(img, ffd::DetectorParams{}));
        std::cout << "blur sweep -> " << blur_out << "\n";
    });

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "Pyramid build timing");
    std::string bench_sizes = "128,256,512";
    bench_cmd->add_option("--sizes", bench_sizes,
                          "comma-separated sizes (side or WxH)");
    bench_cmd->callback([&] {
        std::vector<ffd::TimingRow> rows = ffd::timing_scaling(parse_sizes(bench_sizes));
        std::cout << "pixels,build_ms\n";
        for (const ffd::TimingRow& r : rows)
            std::cout << r.pixels << ',' << r.build_ms << "\n";
    });

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        int code = app.exit(e);  // prints the message and usage
        return code == 0 ? 0 : 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    try
    {
        return run(argc, argv);
    }
    catch (const ffd::FormatError& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    catch (const std::invalid_argument& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
