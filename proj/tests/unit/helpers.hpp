#pragma once

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <string>

inline std::filesystem::path test_data_dir() {
    return std::filesystem::path(SECSCORE_TEST_DATA);
}

// Relative closeness against frozen reference values.
inline bool close_rel(double a, double b, double rel = 1e-12) {
    if (a == b) return true;
    return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

struct TempDir {
    std::filesystem::path path;

    TempDir() {
        static int counter = 0;
        const auto tick = std::chrono::steady_clock::now().time_since_epoch().count();
        path = std::filesystem::temp_directory_path() /
               ("secscore_test_" + std::to_string(++counter) + "_" + std::to_string(tick));
        std::filesystem::create_directories(path);
    }

    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path, ec);
    }

    std::filesystem::path file(const std::string& name, const std::string& content) const {
        const std::filesystem::path p = path / name;
        std::ofstream out(p, std::ios::binary);
        out << content;
        return p;
    }
};
