#include "gpack/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <boost/container_hash/hash.hpp>

#include "gpack/error.hpp"

namespace gpack {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int x : images_) {
    if (x < 0 || static_cast<std::size_t>(x) >= images_.size() || seen[static_cast<std::size_t>(x)]) {
      throw InputError("permutation images are not a bijection on 0.." +
                       std::to_string(static_cast<long long>(images_.size()) - 1));
    }
    seen[static_cast<std::size_t>(x)] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  if (degree < 0) throw InputError("negative permutation degree");
  std::vector<int> images(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) images[static_cast<std::size_t>(i)] = i;
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(std::string_view text, int degree) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) images[static_cast<std::size_t>(i)] = i;
  std::vector<char> used(static_cast<std::size_t>(degree), 0);

  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
      ++pos;
  };
  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') throw InputError("expected '(' in cycle notation: " + std::string(text));
    ++pos;
    std::vector<int> cycle;
    for (;;) {
      skip_space();
      if (pos >= text.size()) throw InputError("unterminated cycle: " + std::string(text));
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw InputError("unexpected character in cycle notation: " + std::string(text));
      long long value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        if (value >= degree) throw InputError("cycle point out of range: " + std::string(text));
        ++pos;
      }
      cycle.push_back(static_cast<int>(value));
    }
    for (int x : cycle) {
      if (used[static_cast<std::size_t>(x)]) throw InputError("point repeated in cycles: " + std::string(text));
      used[static_cast<std::size_t>(x)] = 1;
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      images[static_cast<std::size_t>(cycle[k])] = cycle[(k + 1) % cycle.size()];
    skip_space();
  }
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

std::string Permutation::to_cycles() const {
  std::ostringstream out;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == static_cast<int>(start)) continue;
    out << '(';
    std::size_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = 1;
      if (!first) out << ' ';
      out << x;
      first = false;
      x = static_cast<std::size_t>(images_[x]);
    }
    out << ')';
  }
  std::string s = out.str();
  return s.empty() ? "()" : s;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw InputError("degree mismatch in permutation product");
  std::vector<int> images(q.images_.size());
  for (std::size_t i = 0; i < images.size(); ++i)
    images[i] = p.images_[static_cast<std::size_t>(q.images_[i])];
  Permutation r;
  r.images_ = std::move(images);
  return r;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  auto im = p.images();
  return boost::hash_range(im.begin(), im.end());
}

}  // namespace gpack
