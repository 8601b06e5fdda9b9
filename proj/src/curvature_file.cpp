#include "secondkind/curvature_file.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace secondkind {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

[[noreturn]] void fail(int line, const std::string& what) {
  std::ostringstream os;
  os << "parse error at line " << line << ": " << what;
  throw parse_error(os.str());
}

}  // namespace

CurvatureFile parse_curvature_file(std::istream& in) {
  CurvatureFile file;
  bool have_n = false, have_kind = false, have_s = false, have_model = false, have_curv = false;
  std::set<std::array<int, 4>> seen;

  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;

    if (line.rfind("entry", 0) == 0) {
      std::istringstream is(line.substr(5));
      CurvatureFile::Entry e;
      std::string value;
      if (!(is >> e.index[0] >> e.index[1] >> e.index[2] >> e.index[3] >> value))
        fail(lineno, "entry needs four indices and a value");
      std::string extra;
      if (is >> extra) fail(lineno, "trailing field '" + extra + "' after entry value");
      try {
        e.value = parse_rational(value);
      } catch (const std::exception& ex) {
        fail(lineno, std::string("bad value: ") + ex.what());
      }
      if (!have_n) fail(lineno, "entry before n");
      auto [i, j, k, l] = e.index;
      for (int idx : e.index)
        if (idx < 0 || idx >= file.n) fail(lineno, "index out of range [0, n)");
      if (!(i < j && k < l && (i < k || (i == k && j <= l))))
        fail(lineno, "entry not canonical (need i<j, k<l, (i,j) <= (k,l))");
      if (!seen.insert(e.index).second) fail(lineno, "duplicate canonical entry");
      file.entries.push_back(std::move(e));
      continue;
    }

    auto eq = line.find('=');
    if (eq == std::string::npos) fail(lineno, "expected 'key = value' or 'entry ...'");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (value.empty()) fail(lineno, "missing value for '" + key + "'");

    if (key == "n") {
      try {
        file.n = std::stoi(value);
      } catch (const std::exception&) {
        fail(lineno, "bad n");
      }
      if (file.n < 2) fail(lineno, "n must be >= 2");
      have_n = true;
    } else if (key == "kind") {
      if (value == "components")
        file.kind = CurvatureFile::Kind::Components;
      else if (value == "einstein_weyl")
        file.kind = CurvatureFile::Kind::EinsteinWeyl;
      else if (value == "model")
        file.kind = CurvatureFile::Kind::Model;
      else
        fail(lineno, "kind must be components, einstein_weyl, or model");
      have_kind = true;
    } else if (key == "s") {
      try {
        file.s = parse_rational(value);
      } catch (const std::exception& ex) {
        fail(lineno, std::string("bad s: ") + ex.what());
      }
      have_s = true;
    } else if (key == "model") {
      if (value != "sphere" && value != "flat") fail(lineno, "model must be sphere or flat");
      file.model_name = value;
      have_model = true;
    } else if (key == "curvature") {
      try {
        file.model_curvature = parse_rational(value);
      } catch (const std::exception& ex) {
        fail(lineno, std::string("bad curvature: ") + ex.what());
      }
      have_curv = true;
    } else {
      fail(lineno, "unknown key '" + key + "'");
    }
  }

  if (!have_n) fail(lineno, "missing field n");
  if (!have_kind) fail(lineno, "missing field kind");
  switch (file.kind) {
    case CurvatureFile::Kind::EinsteinWeyl:
      if (!have_s) fail(lineno, "einstein_weyl file needs s");
      break;
    case CurvatureFile::Kind::Model:
      if (!have_model) fail(lineno, "model file needs model = sphere|flat");
      if (file.model_name == "sphere" && !have_curv) fail(lineno, "model sphere needs curvature");
      if (!file.entries.empty()) fail(lineno, "model file cannot carry entries");
      break;
    case CurvatureFile::Kind::Components:
      break;
  }
  return file;
}

CurvatureFile load_curvature_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open input file: " + path);
  return parse_curvature_file(in);
}

void write_curvature_file(const CurvatureFile& file, std::ostream& out) {
  out << "n = " << file.n << "\n";
  switch (file.kind) {
    case CurvatureFile::Kind::Components:
      out << "kind = components\n";
      break;
    case CurvatureFile::Kind::EinsteinWeyl:
      out << "kind = einstein_weyl\n";
      out << "s = " << format_scalar(file.s) << "\n";
      break;
    case CurvatureFile::Kind::Model:
      out << "kind = model\n";
      out << "model = " << file.model_name << "\n";
      if (file.model_name == "sphere")
        out << "curvature = " << format_scalar(file.model_curvature) << "\n";
      break;
  }
  for (const auto& e : file.entries)
    out << "entry " << e.index[0] << " " << e.index[1] << " " << e.index[2] << " " << e.index[3]
        << " " << format_scalar(e.value) << "\n";
}

namespace {

/// Canonical entries define the full array through the symmetries.
template <class T>
Tensor4<T> expand_entries(int n, const std::vector<CurvatureFile::Entry>& entries) {
  Tensor4<T> t(n);
  for (const auto& e : entries) {
    auto [i, j, k, l] = e.index;
    T v;
    if constexpr (is_exact_v<T>)
      v = e.value;
    else
      v = to_double(e.value);
    // both pair orders and both pair swaps
    t(i, j, k, l) = v;
    t(j, i, k, l) = -v;
    t(i, j, l, k) = -v;
    t(j, i, l, k) = v;
    t(k, l, i, j) = v;
    t(l, k, i, j) = -v;
    t(k, l, j, i) = -v;
    t(l, k, j, i) = v;
  }
  return t;
}

}  // namespace

template <class T>
Tensor4<T> curvature_file_to_tensor(const CurvatureFile& file) {
  switch (file.kind) {
    case CurvatureFile::Kind::Model: {
      if (file.model_name == "flat") return Tensor4<T>(file.n);
      Tensor4<T> t = kulkarni_nomizu_gg<T>(file.n);
      if constexpr (is_exact_v<T>)
        t *= file.model_curvature;
      else
        t *= to_double(file.model_curvature);
      return t;
    }
    case CurvatureFile::Kind::Components: {
      Tensor4<T> t = expand_entries<T>(file.n, file.entries);
      validate_curvature_symmetries(t);
      return t;
    }
    case CurvatureFile::Kind::EinsteinWeyl: {
      EinsteinData<T> data;
      data.n = file.n;
      if constexpr (is_exact_v<T>)
        data.s = file.s;
      else
        data.s = to_double(file.s);
      data.weyl = expand_entries<T>(file.n, file.entries);
      return assemble_einstein(data);  // validates the Weyl part
    }
  }
  throw parse_error("unreachable curvature kind");
}

template <class T>
T curvature_file_scalar(const CurvatureFile& file, const Tensor4<T>& assembled) {
  switch (file.kind) {
    case CurvatureFile::Kind::Model: {
      T c;
      if constexpr (is_exact_v<T>)
        c = file.model_name == "flat" ? T(0) : file.model_curvature;
      else
        c = file.model_name == "flat" ? T(0) : to_double(file.model_curvature);
      return c * T(file.n) * T(file.n - 1);
    }
    case CurvatureFile::Kind::EinsteinWeyl:
      if constexpr (is_exact_v<T>)
        return file.s;
      else
        return to_double(file.s);
    case CurvatureFile::Kind::Components:
      return scalar_curvature(assembled);
  }
  throw parse_error("unreachable curvature kind");
}

template Tensor4<double> curvature_file_to_tensor<double>(const CurvatureFile&);
template Tensor4<Rational> curvature_file_to_tensor<Rational>(const CurvatureFile&);
template double curvature_file_scalar<double>(const CurvatureFile&, const Tensor4<double>&);
template Rational curvature_file_scalar<Rational>(const CurvatureFile&, const Tensor4<Rational>&);

}  // namespace secondkind
