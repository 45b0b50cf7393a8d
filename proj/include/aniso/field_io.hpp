#pragma once

#include <string>

#include "aniso/field.hpp"

namespace aniso {

// ANIS field file, little-endian:
//   magic "ANIS", u32 version=1, u32 N, u32 s, f64 p,
//   u64 dims[N], f64 spacing[N], f64 origin[N],
//   u32 CRC32 of all preceding bytes,
//   f64 payload (row-major, last axis fastest),
//   u32 CRC32 of the payload bytes.
// Round-trips are bit-exact for finite values.

struct LoadedField {
  ScalarField field;
  double p = 0;
};

void save_field(const ScalarField& field, double p, const std::string& path);
LoadedField load_field(const std::string& path);

// Companion export: one row per node, columns x1..xN,u.
void export_field_csv(const ScalarField& field, const std::string& path);

}  // namespace aniso
