#pragma once

#include <Eigen/Dense>
#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace kinlab {

using json = nlohmann::ordered_json;

std::uint64_t fnv1a(const void* data, std::size_t bytes, std::uint64_t seed = 0xcbf29ce484222325ULL);
std::string hex64(std::uint64_t v);

// Raw little-endian float64 payloads; matrices are written row-major.
void write_raw(const std::filesystem::path& path, const Eigen::VectorXd& v);
void write_raw(const std::filesystem::path& path, const Eigen::MatrixXd& m);
Eigen::VectorXd read_raw_vector(const std::filesystem::path& path);
Eigen::MatrixXd read_raw_matrix(const std::filesystem::path& path, int rows, int cols);
std::uint64_t raw_checksum(const Eigen::MatrixXd& m);  // checksum of the row-major bytes

void write_json(const std::filesystem::path& path, const json& j);
json read_json(const std::filesystem::path& path);
std::uint64_t file_checksum(const std::filesystem::path& path);

// CSV with every number printed to 17 significant digits.
class CsvWriter {
public:
    CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header);
    void row(const std::vector<double>& values);
    void close();
    ~CsvWriter();

private:
    std::FILE* file_ = nullptr;
};

std::string format17(double v);

}  // namespace kinlab
