#include "dimkit/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "dimkit/errors.hpp"

namespace dimkit {

std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::Numeric: return "numeric";
        case Provenance::Analytic: return "analytic";
        case Provenance::LowerBound: return "lower_bound";
        case Provenance::UpperBound: return "upper_bound";
    }
    return "numeric";
}

namespace {

Provenance provenance_from(const std::string& s) {
    if (s == "numeric") return Provenance::Numeric;
    if (s == "analytic") return Provenance::Analytic;
    if (s == "lower_bound") return Provenance::LowerBound;
    if (s == "upper_bound") return Provenance::UpperBound;
    throw_config("unknown provenance: " + s);
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(Error::Code::Io, "cannot open for writing: " + path);
    return out;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Error::Code::Io, "cannot open for reading: " + path);
    return in;
}

}  // namespace

double SpectrumCurve::value_at(double theta) const {
    if (samples.empty()) throw Error(Error::Code::Extrapolation, "empty curve");
    if (theta < samples.front().theta - 1e-12 || theta > samples.back().theta + 1e-12)
        throw Error(Error::Code::Extrapolation,
                    "theta outside the sampled range of the curve");
    if (samples.size() == 1) return samples.front().value;
    for (std::size_t i = 1; i < samples.size(); ++i) {
        if (theta <= samples[i].theta + 1e-12) {
            const auto& a = samples[i - 1];
            const auto& b = samples[i];
            if (theta <= a.theta) return a.value;
            const double t = (theta - a.theta) / (b.theta - a.theta);
            return a.value + t * (b.value - a.value);
        }
    }
    return samples.back().value;
}

void write_point_cloud(const PointCloud& cloud, const std::string& csv_path) {
    auto out = open_out(csv_path);
    out.precision(17);
    for (int k = 0; k < cloud.dim(); ++k) out << (k ? "," : "") << "x" << (k + 1);
    out << "\n";
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        auto p = cloud.point(i);
        for (int k = 0; k < cloud.dim(); ++k) out << (k ? "," : "") << p[k];
        out << "\n";
    }

    std::map<std::string, std::string> meta;
    std::ostringstream fmt;
    fmt.precision(17);
    auto num = [&](double v) {
        fmt.str("");
        fmt << v;
        return fmt.str();
    };
    meta["ambient_dim"] = std::to_string(cloud.dim());
    meta["resolution"] = num(cloud.resolution());
    meta["count"] = std::to_string(cloud.size());
    for (int k = 0; k < cloud.dim(); ++k) {
        meta["bbox_min_x" + std::to_string(k + 1)] = num(cloud.bbox_min()[k]);
        meta["bbox_max_x" + std::to_string(k + 1)] = num(cloud.bbox_max()[k]);
    }
    write_kv_file(meta, csv_path + ".meta");
}

PointCloud read_point_cloud(const std::string& csv_path) {
    const auto meta = read_kv_file(csv_path + ".meta");
    const auto dim_it = meta.find("ambient_dim");
    const auto res_it = meta.find("resolution");
    if (dim_it == meta.end() || res_it == meta.end())
        throw_config("point cloud sidecar missing ambient_dim/resolution");
    const int dim = std::stoi(dim_it->second);
    const double resolution = std::stod(res_it->second);

    auto in = open_in(csv_path);
    std::string line;
    if (!std::getline(in, line)) throw_config("empty point cloud CSV");
    std::vector<double> coords;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string field;
        int k = 0;
        while (std::getline(row, field, ',')) {
            coords.push_back(std::stod(field));
            ++k;
        }
        if (k != dim) throw_config("point cloud row width does not match ambient_dim");
    }
    return PointCloud::create(dim, std::move(coords), resolution);
}

void write_spectrum_curve(const SpectrumCurve& curve, const std::string& csv_path) {
    auto out = open_out(csv_path);
    out.precision(17);
    out << "theta,value,provenance,family\n";
    for (const auto& s : curve.samples)
        out << s.theta << "," << s.value << "," << to_string(curve.provenance) << ","
            << curve.family << "\n";
}

SpectrumCurve read_spectrum_curve(const std::string& csv_path) {
    auto in = open_in(csv_path);
    std::string line;
    if (!std::getline(in, line) || line != "theta,value,provenance,family")
        throw_config("bad spectrum CSV header");
    SpectrumCurve curve;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string theta, value, prov, family;
        if (!std::getline(row, theta, ',') || !std::getline(row, value, ',') ||
            !std::getline(row, prov, ',') || !std::getline(row, family))
            throw_config("bad spectrum CSV row: " + line);
        curve.samples.push_back({std::stod(theta), std::stod(value)});
        curve.provenance = provenance_from(prov);
        curve.family = family;
    }
    return curve;
}

std::map<std::string, std::string> read_kv_file(const std::string& path) {
    auto in = open_in(path);
    std::map<std::string, std::string> kv;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw_config("not key=value in " + path + ": " + line);
        const auto last = line.find_last_not_of(" \t\r");
        kv[line.substr(first, eq - first)] = line.substr(eq + 1, last - eq);
    }
    return kv;
}

void write_kv_file(const std::map<std::string, std::string>& kv, const std::string& path) {
    auto out = open_out(path);
    for (const auto& [k, v] : kv) out << k << "=" << v << "\n";
}

std::string read_text_file(const std::string& path) {
    auto in = open_in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    auto out = open_out(path);
    out << content;
}

}  // namespace dimkit
