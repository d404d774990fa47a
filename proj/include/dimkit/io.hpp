#pragma once

#include <map>
#include <string>

#include "dimkit/point_cloud.hpp"
#include "dimkit/spectrum.hpp"

namespace dimkit {

// PointCloud CSV: header x1,...,xd, one point per row, full double precision.
// A sidecar key=value file (path + ".meta") records ambient_dim, resolution
// and the bounding box.
void write_point_cloud(const PointCloud& cloud, const std::string& csv_path);
PointCloud read_point_cloud(const std::string& csv_path);

// SpectrumCurve CSV: header theta,value,provenance,family; rows ordered by
// theta.
void write_spectrum_curve(const SpectrumCurve& curve, const std::string& csv_path);
SpectrumCurve read_spectrum_curve(const std::string& csv_path);

// Plain key=value files (configs, sidecars).
std::map<std::string, std::string> read_kv_file(const std::string& path);
void write_kv_file(const std::map<std::string, std::string>& kv, const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace dimkit
