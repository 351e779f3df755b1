#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "magr/dense_matrix.hpp"

namespace magr {

// MAGR tensor file, little-endian, no padding or compression:
//
//   magic    - 4 bytes, "MAGR" (0x4D 0x41 0x47 0x52)
//   version  - u32, must be 1
//   dtype    - u8, 0 = f32, 1 = f64
//   ndim     - u8, 1 or 2
//   dims     - ndim x u64
//   payload  - row-major values, dims product x dtype size
//
// Values are held as f64 in memory regardless of the stored dtype; a
// write after a read reproduces the original file byte for byte.

enum class TensorDType : std::uint8_t { f32 = 0, f64 = 1 };

struct Tensor {
    std::vector<std::uint64_t> dims;  // 1 or 2 entries
    TensorDType dtype = TensorDType::f64;
    std::vector<double> data;  // row-major

    std::size_t count() const;
    DenseMatrix to_matrix() const;  // 1-D tensors become a single column
};

// Default cap on a single tensor payload (also applied to Gram products).
inline constexpr std::size_t kDefaultMemoryCap = std::size_t{2} << 30;  // 2 GiB

Tensor read_tensor(const std::string& path, std::size_t memory_cap = kDefaultMemoryCap);
void write_tensor(const std::string& path, const Tensor& t);

// Shorthands for the common cases.
DenseMatrix read_matrix(const std::string& path, std::size_t memory_cap = kDefaultMemoryCap);
void write_matrix(const std::string& path, const DenseMatrix& m,
                  TensorDType dtype = TensorDType::f64);
std::vector<double> read_vector(const std::string& path,
                                std::size_t memory_cap = kDefaultMemoryCap);
void write_vector(const std::string& path, const std::vector<double>& v,
                  TensorDType dtype = TensorDType::f64);

}  // namespace magr
