#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "earclip/io.hpp"
#include "earclip/polygon.hpp"

namespace test {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline earclip::PolygonWithHoles fixture(const std::string& name) {
    return earclip::parse_polygon(read_file(std::string(EARCLIP_FIXTURES) + "/" + name)).polygon;
}

inline earclip::Ring ring(std::initializer_list<earclip::Point2> pts) { return earclip::Ring{pts}; }

}  // namespace test
