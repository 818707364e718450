#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "twodet/common.hpp"

namespace twodet {

enum class VarRole : uint8_t { Generic, Y1, Y2, X, T, Tau, Param };

inline std::string role_name(VarRole r) {
  switch (r) {
    case VarRole::Generic: return "generic";
    case VarRole::Y1: return "y1";
    case VarRole::Y2: return "y2";
    case VarRole::X: return "x";
    case VarRole::T: return "T";
    case VarRole::Tau: return "tau";
    case VarRole::Param: return "param";
  }
  return "?";
}

inline VarRole role_from_name(const std::string& s) {
  if (s == "generic") return VarRole::Generic;
  if (s == "y1") return VarRole::Y1;
  if (s == "y2") return VarRole::Y2;
  if (s == "x") return VarRole::X;
  if (s == "T") return VarRole::T;
  if (s == "tau") return VarRole::Tau;
  if (s == "param") return VarRole::Param;
  fail(Errc::input, "unknown variable role: " + s);
}

struct Variable {
  std::string name;
  VarRole role = VarRole::Generic;
  int i = 0;  // Y1/Y2/X index, or T's alpha
  int j = 0;  // T's beta
};

// Immutable list of named, role-tagged variables. Blowup rings additionally
// carry (d, e) with c = d+e-1 and a complete T-grid on [c+1].
class Ring {
public:
  explicit Ring(std::vector<Variable> vars, int d = -1, int e = -1)
      : vars_(std::move(vars)), d_(d), e_(e) {
    for (int k = 0; k < static_cast<int>(vars_.size()); ++k) {
      const Variable& v = vars_[k];
      require(by_name_.emplace(v.name, k).second, Errc::input,
              "duplicate variable name: " + v.name);
      if (v.role == VarRole::Tau) tau_ = k;
      if (v.role == VarRole::Param) param_ = k;
    }
    if (d_ >= 0) {
      int c1 = c() + 1;
      t_grid_.assign(c1 * c1, -1);
      for (int k = 0; k < static_cast<int>(vars_.size()); ++k) {
        const Variable& v = vars_[k];
        switch (v.role) {
          case VarRole::Y1:
          case VarRole::Y2:
            require(v.i >= 1 && v.i <= d_, Errc::input, "y index out of range");
            break;
          case VarRole::X:
            require(v.i >= 1 && v.i <= e_, Errc::input, "x index out of range");
            break;
          case VarRole::T:
            require(v.i >= 1 && v.i < v.j && v.j <= c1, Errc::input, "T index out of range");
            t_grid_[(v.i - 1) * c1 + (v.j - 1)] = k;
            break;
          default:
            break;
        }
      }
      for (int a = 1; a <= c1; ++a)
        for (int b = a + 1; b <= c1; ++b)
          require(t_grid_[(a - 1) * c1 + (b - 1)] >= 0, Errc::input,
                  "incomplete T grid in blowup ring");
    }
  }

  int size() const { return static_cast<int>(vars_.size()); }
  const Variable& var(int k) const { return vars_[k]; }
  const std::vector<Variable>& vars() const { return vars_; }

  bool has_blowup_roles() const { return d_ >= 0; }
  int d() const { return d_; }
  int e() const { return e_; }
  int c() const { return d_ + e_ - 1; }

  int index_of(const std::string& name) const {
    auto it = by_name_.find(name);
    require(it != by_name_.end(), Errc::input, "unknown variable: " + name);
    return it->second;
  }
  bool has(const std::string& name) const { return by_name_.count(name) != 0; }

  int t_var(int a, int b) const {
    require(has_blowup_roles(), Errc::input, "ring has no T variables");
    int c1 = c() + 1;
    require(1 <= a && a < b && b <= c1, Errc::input, "T index out of range");
    return t_grid_[(a - 1) * c1 + (b - 1)];
  }
  int y_var(int row, int j) const { return index_of((row == 1 ? "y1_" : "y2_") + std::to_string(j)); }
  int x_var(int h) const { return index_of("x" + std::to_string(h)); }
  int tau_var() const {
    require(tau_ >= 0, Errc::input, "ring has no tau variable");
    return tau_;
  }
  bool has_tau() const { return tau_ >= 0; }
  int param_var() const {
    require(param_ >= 0, Errc::input, "ring has no parameter variable");
    return param_;
  }

private:
  std::vector<Variable> vars_;
  std::unordered_map<std::string, int> by_name_;
  std::vector<int> t_grid_;
  int d_, e_;
  int tau_ = -1, param_ = -1;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<Variable> vars) {
  return std::make_shared<Ring>(std::move(vars));
}

// infers role from the canonical name shapes y1_K / y2_K / xK / T[a,b] / tau / t
inline Variable named_var(const std::string& name) {
  Variable v;
  v.name = name;
  if (name == "tau") { v.role = VarRole::Tau; return v; }
  if (name == "t") { v.role = VarRole::Param; return v; }
  auto num = [](const std::string& s) -> long {
    if (s.empty()) return -1;
    for (char ch : s) if (!isdigit(static_cast<unsigned char>(ch))) return -1;
    return std::stol(s);
  };
  if (name.rfind("y1_", 0) == 0) {
    long k = num(name.substr(3));
    if (k > 0) { v.role = VarRole::Y1; v.i = static_cast<int>(k); return v; }
  }
  if (name.rfind("y2_", 0) == 0) {
    long k = num(name.substr(3));
    if (k > 0) { v.role = VarRole::Y2; v.i = static_cast<int>(k); return v; }
  }
  if (name.size() > 1 && name[0] == 'x') {
    long k = num(name.substr(1));
    if (k > 0) { v.role = VarRole::X; v.i = static_cast<int>(k); return v; }
  }
  if (name.size() > 4 && name.rfind("T[", 0) == 0 && name.back() == ']') {
    auto comma = name.find(',');
    if (comma != std::string::npos) {
      long a = num(name.substr(2, comma - 2));
      long b = num(name.substr(comma + 1, name.size() - comma - 2));
      if (a > 0 && b > a) { v.role = VarRole::T; v.i = static_cast<int>(a); v.j = static_cast<int>(b); return v; }
    }
  }
  return v;  // generic
}

inline std::string t_name(int a, int b) {
  return "T[" + std::to_string(a) + "," + std::to_string(b) + "]";
}

// Presentation ring of Notation-5 type: y1_1..y1_d, y2_1..y2_d, x1..xe,
// T[a,b] for 1 <= a < b <= c+1, then optional tau and parameter t.
inline RingPtr blowup_ring(int d, int e, bool with_tau = false, bool with_param = false) {
  require(d >= 0 && e >= 0 && d + e >= 3, Errc::input, "blowup ring needs d+e >= 3");
  int c1 = d + e;  // c + 1
  std::vector<Variable> vars;
  for (int j = 1; j <= d; ++j) vars.push_back({"y1_" + std::to_string(j), VarRole::Y1, j, 0});
  for (int j = 1; j <= d; ++j) vars.push_back({"y2_" + std::to_string(j), VarRole::Y2, j, 0});
  for (int h = 1; h <= e; ++h) vars.push_back({"x" + std::to_string(h), VarRole::X, h, 0});
  for (int a = 1; a <= c1; ++a)
    for (int b = a + 1; b <= c1; ++b) vars.push_back({t_name(a, b), VarRole::T, a, b});
  if (with_tau) vars.push_back({"tau", VarRole::Tau, 0, 0});
  if (with_param) vars.push_back({"t", VarRole::Param, 0, 0});
  return std::make_shared<Ring>(std::move(vars), d, e);
}

}  // namespace twodet
