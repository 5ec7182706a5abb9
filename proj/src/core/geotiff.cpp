// Copyright 2026 The uvl Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "core/geotiff.hpp"

#include <cstring>
#include <fstream>

#include <nlohmann/json.hpp>

#include "core/errors.hpp"
#include "core/landuse_codes.hpp"
#include "core/util.hpp"

namespace uvl {
namespace {

constexpr uint16_t kTagImageWidth = 256;
constexpr uint16_t kTagImageLength = 257;
constexpr uint16_t kTagBitsPerSample = 258;
constexpr uint16_t kTagCompression = 259;
constexpr uint16_t kTagPhotometric = 262;
constexpr uint16_t kTagStripOffsets = 273;
constexpr uint16_t kTagSamplesPerPixel = 277;
constexpr uint16_t kTagRowsPerStrip = 278;
constexpr uint16_t kTagStripByteCounts = 279;
constexpr uint16_t kTagPlanarConfig = 284;
constexpr uint16_t kTagSampleFormat = 339;
constexpr uint16_t kTagModelPixelScale = 33550;
constexpr uint16_t kTagModelTiepoint = 33922;
constexpr uint16_t kTagGeoKeyDirectory = 34735;

constexpr uint16_t kTypeShort = 3;
constexpr uint16_t kTypeLong = 4;
constexpr uint16_t kTypeDouble = 12;

// GeoKey ids
constexpr uint16_t kGTModelType = 1024;
constexpr uint16_t kGTRasterType = 1025;
constexpr uint16_t kGeographicType = 2048;
constexpr uint16_t kProjectedCSType = 3072;
constexpr uint16_t kProjLinearUnits = 3076;

class Writer {
 public:
  void u16(uint16_t v) {
    bytes_.push_back(static_cast<char>(v & 0xff));
    bytes_.push_back(static_cast<char>(v >> 8));
  }
  void u32(uint32_t v) {
    u16(static_cast<uint16_t>(v & 0xffff));
    u16(static_cast<uint16_t>(v >> 16));
  }
  void f64(double v) {
    uint64_t bits;
    std::memcpy(&bits, &v, 8);
    u32(static_cast<uint32_t>(bits & 0xffffffffULL));
    u32(static_cast<uint32_t>(bits >> 32));
  }
  void raw(const void* data, size_t len) {
    const char* p = static_cast<const char*>(data);
    bytes_.insert(bytes_.end(), p, p + len);
  }
  size_t size() const { return bytes_.size(); }
  std::string& str() { return bytes_; }

 private:
  std::string bytes_;
};

class Reader {
 public:
  Reader(std::string bytes) : bytes_(std::move(bytes)) {}

  uint16_t u16(size_t off) const {
    check(off, 2);
    auto b = [&](size_t i) { return static_cast<uint8_t>(bytes_[off + i]); };
    return big_endian_ ? static_cast<uint16_t>((b(0) << 8) | b(1))
                       : static_cast<uint16_t>(b(0) | (b(1) << 8));
  }
  uint32_t u32(size_t off) const {
    check(off, 4);
    return big_endian_
               ? (static_cast<uint32_t>(u16(off)) << 16) | u16(off + 2)
               : static_cast<uint32_t>(u16(off)) | (static_cast<uint32_t>(u16(off + 2)) << 16);
  }
  double f64(size_t off) const {
    check(off, 8);
    uint64_t lo, hi;
    if (big_endian_) {
      hi = u32(off);
      lo = u32(off + 4);
    } else {
      lo = u32(off);
      hi = u32(off + 4);
    }
    uint64_t bits = lo | (hi << 32);
    double v;
    std::memcpy(&v, &bits, 8);
    return v;
  }
  void set_big_endian(bool be) { big_endian_ = be; }
  size_t size() const { return bytes_.size(); }
  const std::string& str() const { return bytes_; }
  void check(size_t off, size_t len) const {
    if (off + len > bytes_.size()) throw ValidationError("GeoTIFF: truncated file");
  }

 private:
  std::string bytes_;
  bool big_endian_ = false;
};

struct IfdEntry {
  uint16_t type = 0;
  uint32_t count = 0;
  size_t value_offset = 0;  // offset of the value bytes within the file
};

size_t type_size(uint16_t type) {
  switch (type) {
    case 1: return 1;   // BYTE
    case 2: return 1;   // ASCII
    case kTypeShort: return 2;
    case kTypeLong: return 4;
    case kTypeDouble: return 8;
    case 5: return 8;   // RATIONAL
    default: return 0;
  }
}

}  // namespace

GeoTiff read_geotiff(const std::filesystem::path& path) {
  Reader r(read_file(path));
  if (r.size() < 8) throw ValidationError("GeoTIFF: " + path.string() + " too small");
  const std::string& s = r.str();
  if (s[0] == 'I' && s[1] == 'I') {
    r.set_big_endian(false);
  } else if (s[0] == 'M' && s[1] == 'M') {
    r.set_big_endian(true);
  } else {
    throw ValidationError("GeoTIFF: " + path.string() + " is not a TIFF file");
  }
  if (r.u16(2) != 42) throw ValidationError("GeoTIFF: bad magic in " + path.string());

  size_t ifd_off = r.u32(4);
  uint16_t n_entries = r.u16(ifd_off);
  std::map<uint16_t, IfdEntry> tags;
  for (uint16_t i = 0; i < n_entries; ++i) {
    size_t e = ifd_off + 2 + static_cast<size_t>(i) * 12;
    uint16_t tag = r.u16(e);
    IfdEntry entry;
    entry.type = r.u16(e + 2);
    entry.count = r.u32(e + 4);
    size_t total = type_size(entry.type) * entry.count;
    entry.value_offset = total <= 4 ? e + 8 : r.u32(e + 8);
    tags[tag] = entry;
  }

  auto scalar = [&](uint16_t tag, uint32_t fallback, bool required) -> uint32_t {
    auto it = tags.find(tag);
    if (it == tags.end()) {
      if (required)
        throw ValidationError("GeoTIFF: missing tag " + std::to_string(tag) + " in " +
                              path.string());
      return fallback;
    }
    return it->second.type == kTypeShort ? r.u16(it->second.value_offset)
                                         : r.u32(it->second.value_offset);
  };
  auto array_u32 = [&](uint16_t tag) -> std::vector<uint32_t> {
    std::vector<uint32_t> out;
    auto it = tags.find(tag);
    if (it == tags.end()) return out;
    for (uint32_t i = 0; i < it->second.count; ++i) {
      size_t off = it->second.value_offset + i * type_size(it->second.type);
      out.push_back(it->second.type == kTypeShort ? r.u16(off) : r.u32(off));
    }
    return out;
  };

  GeoTiff out;
  uint32_t width = scalar(kTagImageWidth, 0, true);
  uint32_t height = scalar(kTagImageLength, 0, true);
  if (scalar(kTagCompression, 1, false) != 1)
    throw ValidationError("GeoTIFF: only uncompressed files are supported (" +
                          path.string() + ")");
  if (scalar(kTagBitsPerSample, 8, false) != 8 ||
      scalar(kTagSamplesPerPixel, 1, false) != 1)
    throw ValidationError("GeoTIFF: only single-band 8-bit files are supported (" +
                          path.string() + ")");

  std::vector<uint32_t> strip_offsets = array_u32(kTagStripOffsets);
  std::vector<uint32_t> strip_counts = array_u32(kTagStripByteCounts);
  if (strip_offsets.empty() || strip_offsets.size() != strip_counts.size())
    throw ValidationError("GeoTIFF: bad strip layout in " + path.string());
  out.values.reserve(static_cast<size_t>(width) * height);
  for (size_t i = 0; i < strip_offsets.size(); ++i) {
    r.check(strip_offsets[i], strip_counts[i]);
    const char* p = r.str().data() + strip_offsets[i];
    out.values.insert(out.values.end(), p, p + strip_counts[i]);
  }
  if (out.values.size() != static_cast<size_t>(width) * height)
    throw ValidationError("GeoTIFF: pixel data size mismatch in " + path.string());

  // Georeferencing
  auto scale_it = tags.find(kTagModelPixelScale);
  auto tie_it = tags.find(kTagModelTiepoint);
  if (scale_it == tags.end() || tie_it == tags.end() || scale_it->second.count < 3 ||
      tie_it->second.count < 6)
    throw ValidationError("GeoTIFF: missing affine transform in " + path.string());
  double sx = r.f64(scale_it->second.value_offset);
  double sy = r.f64(scale_it->second.value_offset + 8);
  if (sx <= 0 || std::abs(sx - sy) > 1e-9 * sx)
    throw ValidationError("GeoTIFF: pixels must be square (" + path.string() + ")");
  double px = r.f64(tie_it->second.value_offset);
  double py = r.f64(tie_it->second.value_offset + 8);
  double gx = r.f64(tie_it->second.value_offset + 24);
  double gy = r.f64(tie_it->second.value_offset + 32);

  out.grid.pixel_size = sx;
  out.grid.origin_x = gx - px * sx;
  out.grid.origin_y = gy + py * sy;
  out.grid.width = static_cast<int>(width);
  out.grid.height = static_cast<int>(height);
  out.grid.validate();

  auto geo_it = tags.find(kTagGeoKeyDirectory);
  if (geo_it != tags.end()) {
    uint32_t n_keys = r.u16(geo_it->second.value_offset + 6);
    int epsg = 0;
    for (uint32_t k = 0; k < n_keys; ++k) {
      size_t off = geo_it->second.value_offset + 8 + k * 8;
      uint16_t key = r.u16(off);
      uint16_t value = r.u16(off + 6);
      if (key == kGTModelType && value == 2)
        throw ValidationError("GeoTIFF: geographic CRS rejected, projected meter"
                              " system required (" + path.string() + ")");
      if (key == kGeographicType && !tags.count(kTagGeoKeyDirectory) /*unreachable*/)
        ;
      if (key == kProjLinearUnits && value != 9001)
        throw ValidationError("GeoTIFF: linear unit must be meter (" + path.string() +
                              ")");
      if (key == kProjectedCSType) epsg = value;
    }
    if (epsg > 0) out.crs = ProjectedCrs::from_epsg(epsg);
  }
  return out;
}

void write_geotiff(const std::filesystem::path& path, const AffineGrid& grid,
                   const std::vector<uint8_t>& values,
                   std::optional<ProjectedCrs> crs) {
  grid.validate();
  if (values.size() != grid.cell_count())
    throw ValidationError("GeoTIFF write: pixel count mismatch");

  struct Tag {
    uint16_t tag, type;
    uint32_t count;
    std::vector<uint32_t> ints;     // SHORT/LONG payload
    std::vector<double> doubles;    // DOUBLE payload
  };
  std::vector<Tag> tags;
  auto add_short = [&](uint16_t tag, uint32_t v) {
    tags.push_back({tag, kTypeShort, 1, {v}, {}});
  };
  auto add_long = [&](uint16_t tag, uint32_t v) {
    tags.push_back({tag, kTypeLong, 1, {v}, {}});
  };

  add_long(kTagImageWidth, static_cast<uint32_t>(grid.width));
  add_long(kTagImageLength, static_cast<uint32_t>(grid.height));
  add_short(kTagBitsPerSample, 8);
  add_short(kTagCompression, 1);
  add_short(kTagPhotometric, 1);
  add_long(kTagStripOffsets, 0);  // patched below
  add_short(kTagSamplesPerPixel, 1);
  add_long(kTagRowsPerStrip, static_cast<uint32_t>(grid.height));
  add_long(kTagStripByteCounts, static_cast<uint32_t>(values.size()));
  add_short(kTagPlanarConfig, 1);
  add_short(kTagSampleFormat, 1);
  tags.push_back({kTagModelPixelScale, kTypeDouble, 3, {},
                  {grid.pixel_size, grid.pixel_size, 0.0}});
  tags.push_back({kTagModelTiepoint, kTypeDouble, 6, {},
                  {0.0, 0.0, 0.0, grid.origin_x, grid.origin_y, 0.0}});
  std::vector<uint32_t> geokeys;
  if (crs) {
    // version 1.1.0, 4 keys
    geokeys = {1, 1, 0, 4,
               kGTModelType, 0, 1, 1,
               kGTRasterType, 0, 1, 1,  // PixelIsArea
               kProjectedCSType, 0, 1, static_cast<uint32_t>(crs->epsg),
               kProjLinearUnits, 0, 1, 9001};
    tags.push_back({kTagGeoKeyDirectory, kTypeShort,
                    static_cast<uint32_t>(geokeys.size()), geokeys, {}});
  }

  std::sort(tags.begin(), tags.end(),
            [](const Tag& a, const Tag& b) { return a.tag < b.tag; });

  const size_t header_size = 8;
  const size_t ifd_size = 2 + tags.size() * 12 + 4;
  size_t extra_off = header_size + ifd_size;
  // lay out oversize tag values after the IFD
  std::map<uint16_t, uint32_t> value_offsets;
  for (const Tag& t : tags) {
    size_t total = type_size(t.type) * t.count;
    if (total > 4) {
      if (extra_off % 2) ++extra_off;  // word alignment
      value_offsets[t.tag] = static_cast<uint32_t>(extra_off);
      extra_off += total;
    }
  }
  if (extra_off % 2) ++extra_off;
  const uint32_t data_off = static_cast<uint32_t>(extra_off);

  Writer w;
  w.raw("II", 2);
  w.u16(42);
  w.u32(8);
  w.u16(static_cast<uint16_t>(tags.size()));
  for (const Tag& t : tags) {
    w.u16(t.tag);
    w.u16(t.type);
    w.u32(t.count);
    uint32_t v = t.tag == kTagStripOffsets ? data_off
                 : t.ints.empty()          ? 0
                                           : t.ints[0];
    size_t total = type_size(t.type) * t.count;
    if (total > 4) {
      w.u32(value_offsets[t.tag]);
    } else if (t.type == kTypeShort) {
      w.u16(static_cast<uint16_t>(v));
      w.u16(0);
    } else {
      w.u32(v);
    }
  }
  w.u32(0);  // no next IFD
  for (const Tag& t : tags) {
    size_t total = type_size(t.type) * t.count;
    if (total <= 4) continue;
    while (w.size() < value_offsets[t.tag]) w.raw("\0", 1);
    if (t.type == kTypeDouble) {
      for (double d : t.doubles) w.f64(d);
    } else if (t.type == kTypeShort) {
      for (uint32_t v : t.ints) w.u16(static_cast<uint16_t>(v));
    } else {
      for (uint32_t v : t.ints) w.u32(v);
    }
  }
  while (w.size() < data_off) w.raw("\0", 1);
  w.raw(values.data(), values.size());

  atomic_write(path, w.str());
}

BinaryMask read_mask(const std::filesystem::path& path, ProjectedCrs expected_crs) {
  GeoTiff t = read_geotiff(path);
  if (t.crs && !(*t.crs == expected_crs))
    throw ValidationError("mask " + path.string() + ": CRS " + t.crs->to_string() +
                          " does not match run CRS " + expected_crs.to_string());
  for (uint8_t& v : t.values) v = v > 0 ? 1 : 0;  // any nonzero is foreground
  return BinaryMask(t.grid, std::move(t.values));
}

void write_mask(const std::filesystem::path& path, const BinaryMask& mask,
                ProjectedCrs crs) {
  std::vector<uint8_t> bytes = mask.bits();
  for (uint8_t& v : bytes) v = v ? 255 : 0;
  write_geotiff(path, mask.grid(), bytes, crs);
}

FloatGrid read_probability_grid(const std::filesystem::path& path) {
  GeoTiff t = read_geotiff(path);
  FloatGrid g;
  g.grid = t.grid;
  g.values.reserve(t.values.size());
  for (uint8_t v : t.values) g.values.push_back(v / 255.0);
  return g;
}

void write_probability_grid(const std::filesystem::path& path, const FloatGrid& grid,
                            std::optional<ProjectedCrs> crs) {
  std::vector<uint8_t> bytes;
  bytes.reserve(grid.values.size());
  for (double v : grid.values) {
    double clamped = std::min(1.0, std::max(0.0, v));
    bytes.push_back(static_cast<uint8_t>(std::lround(clamped * 255.0)));
  }
  write_geotiff(path, grid.grid, bytes, crs);
}

CategoryRaster read_category_raster(const std::filesystem::path& path,
                                    ProjectedCrs expected_crs) {
  GeoTiff t = read_geotiff(path);
  if (t.crs && !(*t.crs == expected_crs))
    throw ValidationError("raster " + path.string() + ": CRS mismatch with run CRS");
  std::map<int, std::string> legend;
  std::filesystem::path sidecar = path;
  sidecar += ".legend.json";
  if (std::filesystem::exists(sidecar)) {
    nlohmann::json j = nlohmann::json::parse(read_file(sidecar));
    for (auto it = j.begin(); it != j.end(); ++it)
      legend[std::stoi(it.key())] = it.value().get<std::string>();
  } else {
    legend = canonical_landuse_legend();
  }
  return CategoryRaster(t.grid, std::move(t.values), std::move(legend));
}

}  // namespace uvl
