/*
 * Copyright 2026 The pathent Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "pathent/grid_map/map_io.h"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <sstream>
#include <vector>

#include "yaml-cpp/yaml.h"

namespace pathent {
namespace {

struct PgmImage {
  int width = 0;
  int height = 0;
  std::vector<int> gray;  // row-major, top row first, scaled to 0..255
};

class PgmReader {
 public:
  PgmReader(std::string bytes, std::string name)
      : bytes_(std::move(bytes)), name_(std::move(name)) {}

  PgmImage Read() {
    if (bytes_.size() < 2 || bytes_[0] != 'P' ||
        (bytes_[1] != '2' && bytes_[1] != '5')) {
      Fail("not a P2/P5 PGM file");
    }
    const bool binary = bytes_[1] == '5';
    pos_ = 2;
    PgmImage image;
    image.width = ReadHeaderInt("width");
    image.height = ReadHeaderInt("height");
    const int maxval = ReadHeaderInt("maxval");
    if (image.width <= 0 || image.height <= 0) Fail("non-positive dimensions");
    if (maxval <= 0 || maxval > 65535) Fail("maxval out of range");

    const std::size_t n = static_cast<std::size_t>(image.width) *
                          static_cast<std::size_t>(image.height);
    image.gray.reserve(n);
    if (binary) {
      // Exactly one whitespace byte separates maxval from the raster.
      if (pos_ >= bytes_.size() ||
          !std::isspace(static_cast<unsigned char>(bytes_[pos_]))) {
        Fail("missing raster separator");
      }
      ++pos_;
      const std::size_t bytes_per = maxval > 255 ? 2 : 1;
      if (bytes_.size() - pos_ != n * bytes_per) {
        Fail("raster size does not match header dimensions");
      }
      for (std::size_t i = 0; i < n; ++i) {
        int v = static_cast<unsigned char>(bytes_[pos_++]);
        if (bytes_per == 2) {
          v = (v << 8) | static_cast<unsigned char>(bytes_[pos_++]);
        }
        image.gray.push_back(Scale(v, maxval));
      }
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        SkipSpaceAndComments();
        if (pos_ >= bytes_.size()) {
          Fail("raster has fewer values than header dimensions");
        }
        const int v = ReadInt("pixel");
        if (v > maxval) Fail("pixel exceeds maxval");
        image.gray.push_back(Scale(v, maxval));
      }
      SkipSpaceAndComments();
      if (pos_ != bytes_.size()) {
        Fail("raster has more values than header dimensions");
      }
    }
    return image;
  }

 private:
  static int Scale(int v, int maxval) {
    return maxval == 255
               ? v
               : static_cast<int>(std::lround(255.0 * v / maxval));
  }

  [[noreturn]] void Fail(const std::string& what) const {
    throw MapFormatError(name_ + ": malformed PGM: " + what);
  }

  void SkipSpaceAndComments() {
    while (pos_ < bytes_.size()) {
      const char c = bytes_[pos_];
      if (c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  int ReadInt(const char* what) {
    const std::size_t start = pos_;
    long value = 0;
    while (pos_ < bytes_.size() &&
           std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
      value = value * 10 + (bytes_[pos_] - '0');
      if (value > 1'000'000) Fail(std::string(what) + " too large");
      ++pos_;
    }
    if (pos_ == start) Fail(std::string("expected integer ") + what);
    return static_cast<int>(value);
  }

  int ReadHeaderInt(const char* what) {
    SkipSpaceAndComments();
    return ReadInt(what);
  }

  std::string bytes_;
  std::string name_;
  std::size_t pos_ = 0;
};

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MapFormatError("cannot read file: " + path.string());
  return std::string(std::istreambuf_iterator<char>(in), {});
}

MapMode ParseMode(const std::string& mode, const std::string& where) {
  if (mode == "trinary") return MapMode::kTrinary;
  if (mode == "scale") return MapMode::kScale;
  if (mode == "raw") return MapMode::kRaw;
  throw MapFormatError(where + ": unknown map mode '" + mode + "'");
}

const char* ModeName(MapMode mode) {
  switch (mode) {
    case MapMode::kTrinary:
      return "trinary";
    case MapMode::kScale:
      return "scale";
    case MapMode::kRaw:
      return "raw";
  }
  return "trinary";
}

}  // namespace

std::int8_t GrayToRaw(int gray, const MapMetadata& meta) {
  if (meta.mode == MapMode::kRaw) {
    return gray <= 100 ? static_cast<std::int8_t>(gray) : kUnknown;
  }
  if (meta.mode == MapMode::kScale && gray == kUnknownGray) return kUnknown;
  const double occ = meta.negate ? gray / 255.0 : (255.0 - gray) / 255.0;
  if (occ > meta.occupied_thresh) return kOccupiedRaw;
  if (occ < meta.free_thresh) return kFreeRaw;
  if (meta.mode == MapMode::kTrinary) return kUnknown;
  const double ratio =
      (occ - meta.free_thresh) / (meta.occupied_thresh - meta.free_thresh);
  return static_cast<std::int8_t>(std::lround(99.0 * ratio));
}

std::uint8_t RawToGray(std::int8_t raw) {
  if (raw == kUnknown) return kUnknownGray;
  if (raw == kFreeRaw) return kFreeGray;
  if (raw == kOccupiedRaw) return kOccupiedGray;
  return static_cast<std::uint8_t>(
      std::lround(255.0 * (1.0 - static_cast<double>(raw) / 100.0)));
}

MapMetadata ReadMapYaml(const std::filesystem::path& yaml_path) {
  const std::string where = yaml_path.string();
  YAML::Node root;
  try {
    root = YAML::Load(ReadFile(yaml_path));
  } catch (const YAML::Exception& e) {
    throw MapFormatError(where + ": " + e.what());
  }
  if (!root.IsMap()) throw MapFormatError(where + ": expected a mapping");

  MapMetadata meta;
  try {
    if (root["image"]) meta.image = root["image"].as<std::string>();
    if (!root["resolution"]) {
      throw MapFormatError(where + ": missing 'resolution'");
    }
    meta.resolution = root["resolution"].as<double>();
    if (const auto origin = root["origin"]) {
      if (!origin.IsSequence() || origin.size() < 2 || origin.size() > 3) {
        throw MapFormatError(where + ": 'origin' must be [x, y, yaw]");
      }
      meta.origin.x = origin[0].as<double>();
      meta.origin.y = origin[1].as<double>();
      meta.origin.yaw = origin.size() == 3 ? origin[2].as<double>() : 0.0;
    }
    if (const auto negate = root["negate"]) {
      int as_int = 0;
      meta.negate = YAML::convert<int>::decode(negate, as_int)
                        ? as_int != 0
                        : negate.as<bool>();
    }
    if (root["occupied_thresh"]) {
      meta.occupied_thresh = root["occupied_thresh"].as<double>();
    }
    if (root["free_thresh"]) {
      meta.free_thresh = root["free_thresh"].as<double>();
    }
    if (root["mode"]) {
      meta.mode = ParseMode(root["mode"].as<std::string>(), where);
    }
  } catch (const YAML::Exception& e) {
    throw MapFormatError(where + ": " + e.what());
  }
  if (!(meta.resolution > 0.0)) {
    throw MapFormatError(where + ": resolution must be > 0");
  }
  if (!(0.0 <= meta.free_thresh && meta.free_thresh < meta.occupied_thresh &&
        meta.occupied_thresh <= 1.0)) {
    throw MapFormatError(where + ": need 0 <= free_thresh < occupied_thresh <= 1");
  }
  return meta;
}

namespace {

OccupancyGrid GridFromImage(const PgmImage& image, const MapMetadata& meta) {
  OccupancyGrid grid(image.width, image.height, meta.resolution, meta.origin);
  for (int row = 0; row < image.height; ++row) {
    for (int col = 0; col < image.width; ++col) {
      const int gray =
          image.gray[static_cast<std::size_t>(row) * image.width + col];
      grid.set_raw({col, image.height - 1 - row}, GrayToRaw(gray, meta));
    }
  }
  return grid;
}

}  // namespace

OccupancyGrid LoadMap(const std::filesystem::path& pgm_path,
                      const std::filesystem::path& yaml_path) {
  const MapMetadata meta = ReadMapYaml(yaml_path);
  return GridFromImage(PgmReader(ReadFile(pgm_path), pgm_path.string()).Read(),
                       meta);
}

OccupancyGrid LoadMap(const std::filesystem::path& path) {
  const std::string ext = path.extension().string();
  if (ext == ".yaml" || ext == ".yml") {
    const MapMetadata meta = ReadMapYaml(path);
    if (meta.image.empty()) {
      throw MapFormatError(path.string() + ": missing 'image'");
    }
    std::filesystem::path image = meta.image;
    if (image.is_relative()) image = path.parent_path() / image;
    return GridFromImage(PgmReader(ReadFile(image), image.string()).Read(),
                         meta);
  }
  std::filesystem::path sidecar = path;
  sidecar.replace_extension(".yaml");
  if (std::filesystem::exists(sidecar)) return LoadMap(path, sidecar);
  return GridFromImage(PgmReader(ReadFile(path), path.string()).Read(),
                       MapMetadata{});
}

void SaveMap(const OccupancyGrid& grid, const std::filesystem::path& pgm_path,
             const std::filesystem::path& yaml_path, MapMode mode) {
  const auto gray = [mode](std::int8_t raw) -> std::uint8_t {
    if (mode != MapMode::kRaw) return RawToGray(raw);
    return raw == kUnknown ? 255 : static_cast<std::uint8_t>(raw);
  };
  {
    std::ofstream out(pgm_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + pgm_path.string());
    out << "P5\n" << grid.width() << " " << grid.height() << "\n255\n";
    std::string row(static_cast<std::size_t>(grid.width()), '\0');
    for (int y = grid.height() - 1; y >= 0; --y) {
      for (int x = 0; x < grid.width(); ++x) {
        row[static_cast<std::size_t>(x)] =
            static_cast<char>(gray(grid.raw({x, y})));
      }
      out.write(row.data(), static_cast<std::streamsize>(row.size()));
    }
    if (!out) throw std::runtime_error("write failed: " + pgm_path.string());
  }
  std::ofstream yaml(yaml_path);
  if (!yaml) throw std::runtime_error("cannot write " + yaml_path.string());
  char buffer[256];
  std::snprintf(buffer, sizeof(buffer),
                "image: %s\nresolution: %.17g\norigin: [%.17g, %.17g, %.17g]\n"
                "negate: 0\noccupied_thresh: 0.65\nfree_thresh: 0.196\n"
                "mode: %s\n",
                pgm_path.filename().string().c_str(), grid.resolution(),
                grid.origin().x, grid.origin().y, grid.origin().yaw,
                ModeName(mode));
  yaml << buffer;
  if (!yaml) throw std::runtime_error("write failed: " + yaml_path.string());
}

}  // namespace pathent
