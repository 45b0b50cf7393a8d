#include "aniso/field_io.hpp"

#include <zlib.h>

#include <cstring>
#include <fstream>
#include <stdexcept>
#include <vector>

#include "aniso/csv.hpp"

namespace aniso {

namespace {

constexpr char kMagic[4] = {'A', 'N', 'I', 'S'};
constexpr std::uint32_t kVersion = 1;
constexpr Index kMaxNodes = 1 << 28;  // refuse absurd headers before allocating

std::uint32_t crc_of(const std::vector<char>& bytes) {
  return static_cast<std::uint32_t>(
      ::crc32(0L, reinterpret_cast<const Bytef*>(bytes.data()),
              static_cast<uInt>(bytes.size())));
}

void put_bytes(std::vector<char>& buf, const void* src, std::size_t n) {
  const char* s = static_cast<const char*>(src);
  buf.insert(buf.end(), s, s + n);
}

template <typename T>
void put(std::vector<char>& buf, T v) {
  put_bytes(buf, &v, sizeof(T));
}

class Reader {
 public:
  Reader(const char* data, std::size_t size) : data_(data), size_(size) {}

  void read(void* dst, std::size_t n, const char* what) {
    if (pos_ + n > size_)
      throw std::runtime_error(std::string("ANIS load: truncated ") + what);
    std::memcpy(dst, data_ + pos_, n);
    pos_ += n;
  }

  template <typename T>
  T get(const char* what) {
    T v;
    read(&v, sizeof(T), what);
    return v;
  }

  std::size_t pos() const { return pos_; }
  const char* data() const { return data_; }

 private:
  const char* data_;
  std::size_t size_;
  std::size_t pos_ = 0;
};

}  // namespace

void save_field(const ScalarField& field, double p, const std::string& path) {
  const Grid& g = field.grid;
  std::vector<char> header;
  put_bytes(header, kMagic, 4);
  put<std::uint32_t>(header, kVersion);
  put<std::uint32_t>(header, static_cast<std::uint32_t>(g.ndim()));
  put<std::uint32_t>(header, static_cast<std::uint32_t>(g.split));
  put<double>(header, p);
  for (int i = 0; i < g.ndim(); ++i) put<std::uint64_t>(header, static_cast<std::uint64_t>(g.dims[i]));
  for (int i = 0; i < g.ndim(); ++i) put<double>(header, g.spacing[i]);
  for (int i = 0; i < g.ndim(); ++i) put<double>(header, g.origin[i]);
  const std::uint32_t header_crc = crc_of(header);

  std::vector<char> payload;
  payload.reserve(sizeof(double) * static_cast<std::size_t>(field.values.size()));
  put_bytes(payload, field.values.data(), sizeof(double) * static_cast<std::size_t>(field.values.size()));
  const std::uint32_t payload_crc = crc_of(payload);

  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out.write(header.data(), static_cast<std::streamsize>(header.size()));
  out.write(reinterpret_cast<const char*>(&header_crc), sizeof(header_crc));
  out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
  out.write(reinterpret_cast<const char*>(&payload_crc), sizeof(payload_crc));
  if (!out) throw std::runtime_error("write failed: " + path);
}

LoadedField load_field(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::vector<char> bytes((std::istreambuf_iterator<char>(in)),
                          std::istreambuf_iterator<char>());
  Reader r(bytes.data(), bytes.size());

  char magic[4];
  r.read(magic, 4, "header");
  if (std::memcmp(magic, kMagic, 4) != 0)
    throw std::runtime_error("ANIS load: malformed header (bad magic)");
  const auto version = r.get<std::uint32_t>("header");
  if (version != kVersion)
    throw std::runtime_error("ANIS load: malformed header (unsupported version)");
  const auto N = r.get<std::uint32_t>("header");
  const auto s = r.get<std::uint32_t>("header");
  if (N < 2 || N > 16 || s < 1 || s >= N)
    throw std::runtime_error("ANIS load: malformed header (bad N/s)");
  const double p = r.get<double>("header");

  Eigen::VectorXi dims(N);
  Index count = 1;
  for (std::uint32_t i = 0; i < N; ++i) {
    const auto d = r.get<std::uint64_t>("header");
    if (d < 2 || d > static_cast<std::uint64_t>(kMaxNodes))
      throw std::runtime_error("ANIS load: malformed header (bad dims)");
    dims[static_cast<int>(i)] = static_cast<int>(d);
    count *= static_cast<Index>(d);
    if (count > kMaxNodes)
      throw std::runtime_error("ANIS load: malformed header (dims overflow)");
  }
  Eigen::VectorXd spacing(N), origin(N);
  for (std::uint32_t i = 0; i < N; ++i) spacing[static_cast<int>(i)] = r.get<double>("header");
  for (std::uint32_t i = 0; i < N; ++i) origin[static_cast<int>(i)] = r.get<double>("header");

  const std::size_t header_len = r.pos();
  const auto stored_header_crc = r.get<std::uint32_t>("header");
  std::vector<char> header(bytes.begin(), bytes.begin() + static_cast<std::ptrdiff_t>(header_len));
  if (crc_of(header) != stored_header_crc)
    throw std::runtime_error("ANIS load: header checksum mismatch");

  Eigen::ArrayXd values(count);
  r.read(values.data(), sizeof(double) * static_cast<std::size_t>(count), "payload");
  const auto stored_payload_crc = r.get<std::uint32_t>("payload checksum");
  std::vector<char> payload(bytes.begin() + static_cast<std::ptrdiff_t>(header_len + 4),
                            bytes.begin() + static_cast<std::ptrdiff_t>(header_len + 4 +
                                                                        sizeof(double) * count));
  if (crc_of(payload) != stored_payload_crc)
    throw std::runtime_error("ANIS load: payload checksum mismatch");

  LoadedField lf{ScalarField(Grid(dims, spacing, origin, static_cast<int>(s)), std::move(values)), p};
  return lf;
}

void export_field_csv(const ScalarField& field, const std::string& path) {
  const Grid& g = field.grid;
  std::vector<std::string> cols;
  for (int i = 0; i < g.ndim(); ++i) cols.push_back("x" + std::to_string(i + 1));
  cols.push_back("u");
  CsvWriter csv(path, cols);
  for (Index f = 0; f < g.node_count(); ++f) {
    const Eigen::VectorXd x = g.node_coord(f);
    std::vector<std::string> row;
    for (int i = 0; i < g.ndim(); ++i) row.push_back(fmt_double(x[i]));
    row.push_back(fmt_double(field.values[f]));
    csv.write_row(row);
  }
}

}  // namespace aniso
