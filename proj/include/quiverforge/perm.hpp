#ifndef QUIVERFORGE_PERM_HPP
#define QUIVERFORGE_PERM_HPP

#include <stdexcept>
#include <vector>

namespace qf {

// Permutation of {0,...,n-1} stored by images.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images) : _img(std::move(images)) {
    std::vector<char> seen(_img.size(), 0);
    for (int v : _img) {
      if (v < 0 || v >= (int)_img.size() || seen[v])
        throw std::invalid_argument("not a permutation");
      seen[v] = 1;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    return Permutation(std::move(v));
  }

  static Permutation from_cycles(int n, std::vector<std::vector<int>> const &cycles) {
    auto p = identity(n);
    for (auto const &c : cycles)
      for (size_t i = 0; i < c.size(); ++i)
        p._img[c[i]] = c[(i + 1) % c.size()];
    return Permutation(std::move(p._img));
  }

  int size() const { return (int)_img.size(); }
  int operator()(int i) const { return _img[i]; }

  Permutation inverse() const {
    std::vector<int> v(_img.size());
    for (int i = 0; i < (int)_img.size(); ++i) v[_img[i]] = i;
    return Permutation(std::move(v));
  }

  // this after other: (a*b)(x) = a(b(x))
  Permutation compose(Permutation const &other) const {
    std::vector<int> v(_img.size());
    for (int i = 0; i < (int)_img.size(); ++i) v[i] = _img[other(i)];
    return Permutation(std::move(v));
  }

  bool is_identity() const {
    for (int i = 0; i < (int)_img.size(); ++i)
      if (_img[i] != i) return false;
    return true;
  }

  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(_img.size(), 0);
    for (int i = 0; i < (int)_img.size(); ++i) {
      if (seen[i]) continue;
      std::vector<int> c;
      int j = i;
      do {
        c.push_back(j);
        seen[j] = 1;
        j = _img[j];
      } while (j != i);
      out.push_back(std::move(c));
    }
    return out;
  }

  // Smallest n>0 with p^n(i)=i.
  int orbit_length(int i) const {
    int n = 1;
    for (int j = _img[i]; j != i; j = _img[j]) ++n;
    return n;
  }

  bool operator==(Permutation const &o) const { return _img == o._img; }
  std::vector<int> const &images() const { return _img; }

private:
  std::vector<int> _img;
};

} // namespace qf

#endif
