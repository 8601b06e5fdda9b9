#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "secondkind/curvature.hpp"
#include "secondkind/scalar.hpp"
#include "secondkind/tensor4.hpp"

namespace secondkind {

/// Raised on malformed input files; the message carries the line number.
class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Text description of a curvature tensor. Values are kept as exact
/// rationals (finite decimals parse exactly), so writing and re-parsing
/// reproduces the tensor bit for bit in either backend.
///
///   # comment
///   n = 4
///   kind = components | einstein_weyl | model
///   s = 12            (einstein_weyl only)
///   model = sphere    (model only: sphere | flat)
///   curvature = 1     (model sphere only)
///   entry i j k l value
///
/// Indices are 0-based. Only canonical entries are allowed: i < j, k < l,
/// (i,j) <= (k,l) lexicographically; everything else follows by symmetry.
/// Duplicate canonical entries are rejected.
struct CurvatureFile {
  enum class Kind { Components, EinsteinWeyl, Model };

  struct Entry {
    std::array<int, 4> index{};
    Rational value;
  };

  int n = 0;
  Kind kind = Kind::Components;
  Rational s;               // einstein_weyl
  std::string model_name;   // model: "sphere" | "flat"
  Rational model_curvature; // model sphere
  std::vector<Entry> entries;
};

CurvatureFile parse_curvature_file(std::istream& in);
CurvatureFile load_curvature_file(const std::string& path);
void write_curvature_file(const CurvatureFile& file, std::ostream& out);

/// Expands canonical entries by symmetry and validates all curvature
/// invariants (and, for einstein_weyl, the Weyl trace conditions before
/// assembly). Throws invalid_curvature / parse_error with the violated
/// identity named.
template <class T>
Tensor4<T> curvature_file_to_tensor(const CurvatureFile& file);

/// Scalar curvature implied by the file (model/einstein files carry it;
/// component files get the Ricci contraction).
template <class T>
T curvature_file_scalar(const CurvatureFile& file, const Tensor4<T>& assembled);

extern template Tensor4<double> curvature_file_to_tensor<double>(const CurvatureFile&);
extern template Tensor4<Rational> curvature_file_to_tensor<Rational>(const CurvatureFile&);
extern template double curvature_file_scalar<double>(const CurvatureFile&, const Tensor4<double>&);
extern template Rational curvature_file_scalar<Rational>(const CurvatureFile&,
                                                         const Tensor4<Rational>&);

}  // namespace secondkind
