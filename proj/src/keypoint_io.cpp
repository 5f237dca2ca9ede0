#include "ffd/keypoint_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "ffd/pgm_io.hpp"  // FormatError

namespace ffd {

namespace {

std::string fixed6(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

// Pulls `"key": <number>` out of a flat JSON object; the writer controls the
// layout, so a targeted scan is enough.
double json_field(const std::string& obj, const std::string& key, const std::string& path)
{
    std::string needle = "\"" + key + "\":";
    std::size_t pos = obj.find(needle);
    if (pos == std::string::npos)
        throw FormatError(path + ": missing field " + key);
    return std::stod(obj.substr(pos + needle.size()));
}

}  // namespace

KeypointFormat parse_keypoint_format(const std::string& name)
{
    if (name == "json")
        return KeypointFormat::json;
    if (name == "csv")
        return KeypointFormat::csv;
    throw std::invalid_argument("unknown keypoint format: " + name);
}

std::string format_keypoints(const std::vector<Keypoint>& keypoints, KeypointFormat format)
{
    std::ostringstream out;
    if (format == KeypointFormat::csv)
    {
        out << "x,y,sigma,response,cm,level\n";
        for (const Keypoint& k : keypoints)
            out << fixed6(k.x) << ',' << fixed6(k.y) << ',' << fixed6(k.sigma) << ','
                << fixed6(k.response) << ',' << fixed6(k.cm) << ',' << k.level << '\n';
        return out.str();
    }
    if (keypoints.empty())
        return "[]\n";
    out << "[\n";
    for (std::size_t i = 0; i < keypoints.size(); ++i)
    {
        const Keypoint& k = keypoints[i];
        out << "  {\"x\": " << fixed6(k.x) << ", \"y\": " << fixed6(k.y)
            << ", \"sigma\": " << fixed6(k.sigma)
            << ", \"response\": " << fixed6(k.response)
            << ", \"cm\": " << fixed6(k.cm)
            << ", \"level\": " << k.level << "}"
            << (i + 1 < keypoints.size() ? "," : "") << "\n";
    }
    out << "]\n";
    return out.str();
}

void write_keypoints(const std::vector<Keypoint>& keypoints, KeypointFormat format,
                     const std::string& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error(path + ": cannot open for writing");
    out << format_keypoints(keypoints, format);
    if (!out)
        throw std::runtime_error(path + ": write failed");
}

std::vector<KeypointRecord> read_keypoints(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw FormatError(path + ": cannot open file");
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::string text = buffer.str();

    std::vector<KeypointRecord> records;
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '[')
    {
        std::size_t pos = first;
        while ((pos = text.find('{', pos)) != std::string::npos)
        {
            std::size_t end = text.find('}', pos);
            if (end == std::string::npos)
                throw FormatError(path + ": unterminated JSON object");
            std::string obj = text.substr(pos, end - pos + 1);
            KeypointRecord r;
            r.x = json_field(obj, "x", path);
            r.y = json_field(obj, "y", path);
            r.sigma = json_field(obj, "sigma", path);
            r.response = json_field(obj, "response", path);
            r.cm = json_field(obj, "cm", path);
            r.level = static_cast<int>(json_field(obj, "level", path));
            records.push_back(r);
            pos = end + 1;
        }
        return records;
    }

    std::istringstream lines(text);
    std::string line;
    if (!std::getline(lines, line) || line.rfind("x,y,sigma,response,cm,level", 0) != 0)
        throw FormatError(path + ": missing CSV header");
    while (std::getline(lines, line))
    {
        if (line.empty())
            continue;
        KeypointRecord r;
        char comma;
        std::istringstream ls(line);
        if (!(ls >> r.x >> comma >> r.y >> comma >> r.sigma >> comma >> r.response
                 >> comma >> r.cm >> comma >> r.level))
            throw FormatError(path + ": malformed CSV row: " + line);
        records.push_back(r);
    }
    return records;
}

}  // namespace ffd
