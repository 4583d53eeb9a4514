#ifndef MULAMBDA_PERM_HPP
#define MULAMBDA_PERM_HPP

#include <compare>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mulambda {

using point = std::uint16_t;

// A permutation of {0,...,degree-1}, stored as its image table.
class Perm {
public:
  Perm() = default;

  explicit Perm(std::vector<point> images) : img_(std::move(images)) {
    validate();
  }

  static Perm identity(std::size_t degree) {
    std::vector<point> v(degree);
    for (std::size_t i = 0; i < degree; ++i) v[i] = static_cast<point>(i);
    return Perm(std::move(v));
  }

  std::size_t degree() const { return img_.size(); }
  point operator()(point x) const { return img_[x]; }
  const std::vector<point> &images() const { return img_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  // (p*q)(x) = p(q(x))
  friend Perm compose(const Perm &p, const Perm &q) {
    if (p.degree() != q.degree())
      throw std::invalid_argument("compose: degree mismatch");
    std::vector<point> v(p.degree());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = p.img_[q.img_[i]];
    Perm r;
    r.img_ = std::move(v);
    return r;
  }

  Perm inverse() const {
    std::vector<point> v(degree());
    for (std::size_t i = 0; i < v.size(); ++i)
      v[img_[i]] = static_cast<point>(i);
    Perm r;
    r.img_ = std::move(v);
    return r;
  }

  // extend to a larger degree, fixing the new points
  Perm extended(std::size_t degree) const {
    if (degree < img_.size())
      throw std::invalid_argument("extended: smaller degree");
    std::vector<point> v = img_;
    for (std::size_t i = img_.size(); i < degree; ++i)
      v.push_back(static_cast<point>(i));
    Perm r;
    r.img_ = std::move(v);
    return r;
  }

  // shift all points up by d and extend below with fixed points
  Perm shifted(std::size_t d) const {
    std::vector<point> v(d + img_.size());
    for (std::size_t i = 0; i < d; ++i) v[i] = static_cast<point>(i);
    for (std::size_t i = 0; i < img_.size(); ++i)
      v[d + i] = static_cast<point>(img_[i] + d);
    Perm r;
    r.img_ = std::move(v);
    return r;
  }

  std::size_t order() const {
    Perm x = *this;
    std::size_t n = 1;
    while (!x.is_identity()) { x = compose(x, *this); ++n; }
    return n;
  }

  // product of disjoint cycles, e.g. "(0 1)(2 3 4)"; fixed points omitted
  std::string cycle_string() const {
    std::ostringstream os;
    std::vector<bool> seen(degree(), false);
    bool any = false;
    for (std::size_t s = 0; s < degree(); ++s) {
      if (seen[s] || img_[s] == s) continue;
      any = true;
      os << '(' << s;
      seen[s] = true;
      for (point x = img_[s]; x != s; x = img_[x]) {
        os << ' ' << x;
        seen[x] = true;
      }
      os << ')';
    }
    if (!any) os << "()";
    return os.str();
  }

  // parse disjoint-cycle notation; degree = max point + 1, at least min_degree
  static Perm from_cycles(const std::string &text, std::size_t min_degree = 0);

  friend bool operator==(const Perm &a, const Perm &b) = default;
  friend auto operator<=>(const Perm &a, const Perm &b) = default;

private:
  void validate() const {
    std::vector<bool> hit(img_.size(), false);
    for (point x : img_) {
      if (x >= img_.size() || hit[x])
        throw std::invalid_argument("Perm: image table is not a bijection");
      hit[x] = true;
    }
  }

  std::vector<point> img_;
};

inline Perm Perm::from_cycles(const std::string &text, std::size_t min_degree) {
  std::vector<std::vector<long>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  skip_ws();
  long maxpt = -1;
  while (i < text.size()) {
    if (text[i] != '(')
      throw std::invalid_argument("cycle parse error at position " + std::to_string(i));
    ++i;
    std::vector<long> cyc;
    for (;;) {
      skip_ws();
      if (i < text.size() && text[i] == ')') { ++i; break; }
      if (i < text.size() && text[i] == ',') { ++i; continue; }
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i)
        throw std::invalid_argument("cycle parse error at position " + std::to_string(i));
      long v = std::stol(text.substr(i, j - i));
      cyc.push_back(v);
      maxpt = std::max(maxpt, v);
      i = j;
    }
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
    skip_ws();
  }
  std::size_t deg = std::max<std::size_t>(static_cast<std::size_t>(maxpt + 1), min_degree);
  if (deg >= 65535) throw std::invalid_argument("cycle parse: point out of range");
  std::vector<point> img(deg);
  for (std::size_t k = 0; k < deg; ++k) img[k] = static_cast<point>(k);
  for (const auto &cyc : cycles) {
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      point from = static_cast<point>(cyc[k]);
      point to = static_cast<point>(cyc[(k + 1) % cyc.size()]);
      if (img[from] != from)
        throw std::invalid_argument("cycle parse: cycles not disjoint");
      img[from] = to;
    }
  }
  return Perm(std::move(img));
}

} // namespace mulambda

#endif
