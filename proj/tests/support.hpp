#pragma once

#include "qorder/generate.hpp"

#include <filesystem>
#include <fstream>
#include <string>

#ifndef QORDER_FIXTURES
#error "QORDER_FIXTURES must name the fixture directory"
#endif

namespace support {

inline std::filesystem::path fixture(const std::string& name) { return std::filesystem::path(QORDER_FIXTURES) / name; }

inline qorder::QuantalePtr shared(qorder::FiniteQuantale q) {
    return std::make_shared<const qorder::FiniteQuantale>(std::move(q));
}

inline const char* const builtins[] = {"bool2", "c3", "c4", "lukasiewicz(4)", "sup_endo(2)", "rel(2)"};

// A scratch directory removed on destruction.
struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("qorder-test-" + std::to_string(reinterpret_cast<std::uintptr_t>(this)) + "-" +
                std::to_string(std::random_device{}()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::filesystem::path write(const std::string& name, const std::string& text) const {
        auto p = path / name;
        std::ofstream(p) << text;
        return p;
    }
};

}  // namespace support
