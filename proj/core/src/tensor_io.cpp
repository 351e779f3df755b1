#include "magr/tensor_io.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>

#include "magr/errors.hpp"

namespace magr {

namespace {

constexpr char kMagic[4] = {'M', 'A', 'G', 'R'};
constexpr std::uint32_t kVersion = 1;

void put_u32(std::string& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

void put_u64(std::string& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

std::uint32_t get_u32(const unsigned char* p) {
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(p[i]) << (8 * i);
    return v;
}

std::uint64_t get_u64(const unsigned char* p) {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(p[i]) << (8 * i);
    return v;
}

double get_f64(const unsigned char* p) {
    std::uint64_t bits = get_u64(p);
    double v;
    std::memcpy(&v, &bits, 8);
    return v;
}

float get_f32(const unsigned char* p) {
    std::uint32_t bits = get_u32(p);
    float v;
    std::memcpy(&v, &bits, 4);
    return v;
}

}  // namespace

const char* to_string(parse_kind k) {
    switch (k) {
        case parse_kind::bad_magic: return "bad magic";
        case parse_kind::unsupported_version: return "unsupported version";
        case parse_kind::unsupported_dtype: return "unsupported dtype";
        case parse_kind::bad_ndim: return "bad ndim";
        case parse_kind::bad_dims: return "bad dims";
        case parse_kind::truncated_header: return "truncated header";
        case parse_kind::truncated_payload: return "truncated payload";
        case parse_kind::trailing_data: return "trailing data";
        case parse_kind::non_finite: return "non-finite payload";
    }
    return "parse error";
}

std::size_t Tensor::count() const {
    std::size_t n = 1;
    for (auto d : dims) n *= static_cast<std::size_t>(d);
    return dims.empty() ? 0 : n;
}

DenseMatrix Tensor::to_matrix() const {
    if (dims.size() == 1) return DenseMatrix(static_cast<std::size_t>(dims[0]), 1, data);
    return DenseMatrix(static_cast<std::size_t>(dims[0]), static_cast<std::size_t>(dims[1]), data);
}

Tensor read_tensor(const std::string& path, std::size_t memory_cap) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open " + path);
    std::string raw((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw io_error("read failed on " + path);
    const auto* p = reinterpret_cast<const unsigned char*>(raw.data());
    const std::size_t len = raw.size();

    if (len < 4 || std::memcmp(p, kMagic, 4) != 0)
        throw parse_error(parse_kind::bad_magic, path);
    std::size_t off = 4;
    if (len < off + 4 + 1 + 1) throw parse_error(parse_kind::truncated_header, path);
    const std::uint32_t version = get_u32(p + off);
    off += 4;
    if (version != kVersion)
        throw parse_error(parse_kind::unsupported_version,
                          path + " (version " + std::to_string(version) + ")");
    const std::uint8_t dtype_raw = p[off++];
    if (dtype_raw > 1)
        throw parse_error(parse_kind::unsupported_dtype,
                          path + " (dtype " + std::to_string(dtype_raw) + ")");
    const std::uint8_t ndim = p[off++];
    if (ndim < 1 || ndim > 2)
        throw parse_error(parse_kind::bad_ndim, path + " (ndim " + std::to_string(ndim) + ")");
    if (len < off + std::size_t{8} * ndim) throw parse_error(parse_kind::truncated_header, path);

    Tensor t;
    t.dtype = static_cast<TensorDType>(dtype_raw);
    std::uint64_t count = 1;
    for (int d = 0; d < ndim; ++d) {
        const std::uint64_t dim = get_u64(p + off);
        off += 8;
        if (dim == 0) throw parse_error(parse_kind::bad_dims, path + " (zero dimension)");
        if (count > std::numeric_limits<std::uint64_t>::max() / dim)
            throw parse_error(parse_kind::bad_dims, path + " (dims product overflow)");
        count *= dim;
        t.dims.push_back(dim);
    }
    const std::size_t elem = t.dtype == TensorDType::f32 ? 4 : 8;
    if (count > memory_cap / elem)
        throw capacity_error(path + ": tensor exceeds memory cap");
    const std::size_t payload = static_cast<std::size_t>(count) * elem;
    if (len - off < payload) throw parse_error(parse_kind::truncated_payload, path);
    if (len - off > payload) throw parse_error(parse_kind::trailing_data, path);

    t.data.resize(static_cast<std::size_t>(count));
    for (std::size_t i = 0; i < t.data.size(); ++i) {
        const double v = t.dtype == TensorDType::f32
                             ? static_cast<double>(get_f32(p + off + 4 * i))
                             : get_f64(p + off + 8 * i);
        if (!std::isfinite(v)) throw parse_error(parse_kind::non_finite, path);
        t.data[i] = v;
    }
    return t;
}

void write_tensor(const std::string& path, const Tensor& t) {
    if (t.dims.empty() || t.dims.size() > 2)
        throw argument_error("write_tensor: ndim must be 1 or 2");
    if (t.count() != t.data.size())
        throw argument_error("write_tensor: dims product does not match data length");

    std::string out;
    out.reserve(16 + 8 * t.dims.size() + 8 * t.data.size());
    out.append(kMagic, 4);
    put_u32(out, kVersion);
    out.push_back(static_cast<char>(t.dtype));
    out.push_back(static_cast<char>(t.dims.size()));
    for (auto d : t.dims) put_u64(out, d);
    if (t.dtype == TensorDType::f32) {
        for (double v : t.data) {
            const float f = static_cast<float>(v);
            std::uint32_t bits;
            std::memcpy(&bits, &f, 4);
            put_u32(out, bits);
        }
    } else {
        for (double v : t.data) {
            std::uint64_t bits;
            std::memcpy(&bits, &v, 8);
            put_u64(out, bits);
        }
    }

    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw io_error("cannot open " + path + " for writing");
    os.write(out.data(), static_cast<std::streamsize>(out.size()));
    if (!os) throw io_error("write failed on " + path);
}

DenseMatrix read_matrix(const std::string& path, std::size_t memory_cap) {
    return read_tensor(path, memory_cap).to_matrix();
}

void write_matrix(const std::string& path, const DenseMatrix& m, TensorDType dtype) {
    Tensor t;
    t.dims = {m.rows(), m.cols()};
    t.dtype = dtype;
    t.data = m.values();
    write_tensor(path, t);
}

std::vector<double> read_vector(const std::string& path, std::size_t memory_cap) {
    return read_tensor(path, memory_cap).data;
}

void write_vector(const std::string& path, const std::vector<double>& v, TensorDType dtype) {
    Tensor t;
    t.dims = {v.size()};
    t.dtype = dtype;
    t.data = v;
    write_tensor(path, t);
}

}  // namespace magr
