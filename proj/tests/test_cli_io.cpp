#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "ffd/homography.hpp"
#include "ffd/image.hpp"
#include "ffd/keypoint_io.hpp"
#include "ffd/pgm_io.hpp"
#include "ffd/png_io.hpp"

using namespace ffd;

namespace {

std::string temp_path(const std::string& name)
{
    return (std::filesystem::temp_directory_path() / name).string();
}

void write_bytes(const std::string& path, const std::vector<unsigned char>& bytes)
{
    std::ofstream out(path, std::ios::binary);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
}

}  // namespace

TEST_CASE("to_grayscale luma weights")
{
    RgbImage8 rgb;
    rgb.width = 3;
    rgb.height = 1;
    rgb.samples = {255, 255, 255, 0, 0, 0, 255, 0, 0};
    GrayImage g = to_grayscale(rgb);
    CHECK(g.pixels[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(g.pixels[1] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(g.pixels[2] == doctest::Approx(0.299).epsilon(1e-12));

    RgbImage8 empty;
    CHECK_THROWS_AS(to_grayscale(empty), std::invalid_argument);
}

TEST_CASE("read_pgm 8-bit")
{
    std::string path = temp_path("ffd_test_2x2.pgm");
    write_bytes(path, {'P', '5', '\n', '2', ' ', '2', '\n', '2', '5', '5', '\n',
                       0, 255, 128, 64});
    GrayImage img = read_pgm(path);
    REQUIRE(img.width == 2);
    REQUIRE(img.height == 2);
    CHECK(img.pixels[0] == doctest::Approx(0.0));
    CHECK(img.pixels[1] == doctest::Approx(1.0));
    CHECK(img.pixels[2] == doctest::Approx(0.50196).epsilon(1e-4));
    CHECK(img.pixels[3] == doctest::Approx(0.25098).epsilon(1e-4));
    std::remove(path.c_str());
}

TEST_CASE("read_pgm 16-bit big-endian")
{
    std::string path = temp_path("ffd_test_16bit.pgm");
    write_bytes(path, {'P', '5', '\n', '1', ' ', '1', '\n', '6', '5', '5', '3', '5', '\n',
                       0x80, 0x00});
    GrayImage img = read_pgm(path);
    REQUIRE(img.size() == 1);
    CHECK(img.pixels[0] == doctest::Approx(32768.0 / 65535.0).epsilon(1e-9));
    CHECK(std::abs(img.pixels[0] - 0.50001) < 1e-5);
    std::remove(path.c_str());
}

TEST_CASE("read_pgm rejects malformed input")
{
    std::string path = temp_path("ffd_test_bad.pgm");

    write_bytes(path, {'P', '2', '\n', '1', ' ', '1', '\n', '2', '5', '5', '\n', '0'});
    CHECK_THROWS_AS(read_pgm(path), FormatError);

    write_bytes(path, {'P', '5', '\n', '2', ' ', '2', '\n', '2', '5', '5', '\n', 0, 255});
    CHECK_THROWS_WITH_AS(read_pgm(path), doctest::Contains("byte"), FormatError);

    write_bytes(path, {'P', '5', '\n', '1', ' ', '1', '\n', '1', '2', '8', '\n', 0});
    CHECK_THROWS_AS(read_pgm(path), FormatError);

    CHECK_THROWS_AS(read_pgm(temp_path("ffd_does_not_exist.pgm")), FormatError);
    std::remove(path.c_str());
}

TEST_CASE("pgm write/read round trip with comment handling")
{
    std::string path = temp_path("ffd_test_rt.pgm");
    GrayImage img(7, 5);
    for (std::size_t i = 0; i < img.size(); ++i)
        img.pixels[i] = static_cast<double>(i) / (img.size() - 1);
    write_pgm(img, path);
    GrayImage back = read_pgm(path);
    REQUIRE(back.width == 7);
    REQUIRE(back.height == 5);
    for (std::size_t i = 0; i < img.size(); ++i)
        CHECK(std::abs(back.pixels[i] - img.pixels[i]) <= 0.5 / 255.0 + 1e-12);

    // header comments are legal
    write_bytes(path, {'P', '5', '\n', '#', ' ', 'h', 'i', '\n', '1', ' ', '1', '\n',
                       '2', '5', '5', '\n', 200});
    CHECK(read_pgm(path).pixels[0] == doctest::Approx(200.0 / 255.0).epsilon(1e-9));
    std::remove(path.c_str());
}

TEST_CASE("keypoint serialization")
{
    Keypoint k;
    k.x = 12.345678;
    k.y = -0.5;
    k.sigma = 1.209338;
    k.response = 0.125;
    k.cm = 0.03125;
    k.level = 2;

    SUBCASE("empty json array")
    {
        CHECK(format_keypoints({}, KeypointFormat::json) == "[]\n");
    }

    SUBCASE("csv layout")
    {
        std::string csv = format_keypoints({k}, KeypointFormat::csv);
        CHECK(csv == "x,y,sigma,response,cm,level\n"
                     "12.345678,-0.500000,1.209338,0.125000,0.031250,2\n");
    }

    SUBCASE("round trips in both formats")
    {
        for (KeypointFormat fmt : {KeypointFormat::json, KeypointFormat::csv})
        {
            std::string path = temp_path(fmt == KeypointFormat::json ? "ffd_kp.json"
                                                                     : "ffd_kp.csv");
            write_keypoints({k, k}, fmt, path);
            std::vector<KeypointRecord> rec = read_keypoints(path);
            REQUIRE(rec.size() == 2);
            CHECK(std::abs(rec[0].x - k.x) < 1e-6);
            CHECK(std::abs(rec[0].y - k.y) < 1e-6);
            CHECK(std::abs(rec[0].sigma - k.sigma) < 1e-6);
            CHECK(std::abs(rec[0].response - k.response) < 1e-6);
            CHECK(std::abs(rec[0].cm - k.cm) < 1e-6);
            CHECK(rec[0].level == 2);
            std::remove(path.c_str());
        }
    }

    CHECK_THROWS_AS(parse_keypoint_format("xml"), std::invalid_argument);
}

TEST_CASE("read_homography")
{
    std::string path = temp_path("ffd_test_h.txt");
    {
        std::ofstream out(path);
        out << "# a comment\n1 0 5\n0 1 -2\n0 0 1\n";
    }
    Homography h = read_homography(path);
    CHECK(h.at(0, 2) == 5.0);
    CHECK(h.at(1, 2) == -2.0);

    {
        std::ofstream out(path);
        out << "1 0 5 0 1\n";
    }
    CHECK_THROWS_AS(read_homography(path), FormatError);

    {
        std::ofstream out(path);
        out << "1 2 3 2 4 6 0 0 1\n";
    }
    CHECK_THROWS_AS(read_homography(path), FormatError);
    std::remove(path.c_str());
}

TEST_CASE("png decoding")
{
    if (!png_supported())
        return;  // feature-gated build

    static const unsigned char kWhiteGrayPng[] = {
        137, 80, 78, 71, 13, 10, 26, 10, 0, 0, 0, 13, 73, 72, 68, 82, 0, 0, 0, 1, 0, 0,
        0, 1, 8, 0, 0, 0, 0, 58, 126, 155, 85, 0, 0, 0, 10, 73, 68, 65, 84, 120, 156,
        99, 248, 15, 0, 1, 1, 1, 0, 177, 56, 246, 20, 0, 0, 0, 0, 73, 69, 78, 68, 174,
        66, 96, 130};
    static const unsigned char kRedWhiteRgbPng[] = {
        137, 80, 78, 71, 13, 10, 26, 10, 0, 0, 0, 13, 73, 72, 68, 82, 0, 0, 0, 2, 0, 0,
        0, 1, 8, 2, 0, 0, 0, 123, 64, 232, 221, 0, 0, 0, 15, 73, 68, 65, 84, 120, 156,
        99, 252, 207, 192, 192, 240, 255, 63, 0, 9, 5, 2, 255, 196, 30, 74, 22, 0, 0, 0,
        0, 73, 69, 78, 68, 174, 66, 96, 130};
    static const unsigned char kGray16Png[] = {
        137, 80, 78, 71, 13, 10, 26, 10, 0, 0, 0, 13, 73, 72, 68, 82, 0, 0, 0, 1, 0, 0,
        0, 1, 16, 0, 0, 0, 0, 106, 238, 71, 22, 0, 0, 0, 11, 73, 68, 65, 84, 120, 156,
        99, 152, 227, 0, 0, 1, 123, 0, 221, 64, 230, 5, 129, 0, 0, 0, 0, 73, 69, 78, 68,
        174, 66, 96, 130};
    static const unsigned char kRgbaPng[] = {
        137, 80, 78, 71, 13, 10, 26, 10, 0, 0, 0, 13, 73, 72, 68, 82, 0, 0, 0, 1, 0, 0,
        0, 1, 8, 6, 0, 0, 0, 31, 21, 196, 137, 0, 0, 0, 13, 73, 68, 65, 84, 120, 156,
        99, 248, 255, 255, 127, 3, 0, 9, 124, 3, 126, 78, 187, 27, 93, 0, 0, 0, 0, 73,
        69, 78, 68, 174, 66, 96, 130};

    auto dump = [&](const unsigned char* data, std::size_t n, const char* name) {
        std::string path = temp_path(name);
        write_bytes(path, std::vector<unsigned char>(data, data + n));
        return path;
    };

    std::string white = dump(kWhiteGrayPng, sizeof kWhiteGrayPng, "ffd_white.png");
    GrayImage g = read_png(white);
    REQUIRE(g.size() == 1);
    CHECK(g.pixels[0] == doctest::Approx(1.0));

    std::string rgb = dump(kRedWhiteRgbPng, sizeof kRedWhiteRgbPng, "ffd_rgb.png");
    GrayImage c = read_png(rgb);
    REQUIRE(c.size() == 2);
    CHECK(c.pixels[0] == doctest::Approx(0.299).epsilon(1e-6));
    CHECK(c.pixels[1] == doctest::Approx(1.0));

    std::string deep = dump(kGray16Png, sizeof kGray16Png, "ffd_16.png");
    CHECK_THROWS_AS(read_png(deep), FormatError);

    std::string rgba = dump(kRgbaPng, sizeof kRgbaPng, "ffd_rgba.png");
    GrayImage a = read_png(rgba);  // alpha dropped with a warning
    REQUIRE(a.size() == 1);
    CHECK(a.pixels[0] == doctest::Approx(1.0));

    for (const std::string& p : {white, rgb, deep, rgba})
        std::remove(p.c_str());
}
