#include "diagre/permutation.hpp"

#include <algorithm>
#include <sstream>

#include "diagre/normal_form.hpp"

namespace diagre {

Permutation Permutation::from_images(std::vector<int> images) {
  std::vector<bool> seen(images.size(), false);
  for (int v : images) {
    if (v < 1 || v > static_cast<int>(images.size()) ||
        seen[static_cast<std::size_t>(v - 1)])
      throw TypeError("image list is not a bijection on {1..n}");
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i + 1;
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation compose(const Permutation& p2, const Permutation& p1) {
  if (p1.size() != p2.size())
    throw TypeError("composing permutations of different sizes: " +
                    std::to_string(p1.size()) + " vs " +
                    std::to_string(p2.size()));
  std::vector<int> images(static_cast<std::size_t>(p1.size()));
  for (int i = 1; i <= p1.size(); ++i)
    images[static_cast<std::size_t>(i - 1)] = p2(p1(i));
  return Permutation::from_images(std::move(images));
}

Permutation dsum(const Permutation& p1, const Permutation& p2) {
  std::vector<int> images;
  images.reserve(static_cast<std::size_t>(p1.size() + p2.size()));
  for (int v : p1.images()) images.push_back(v);
  for (int v : p2.images()) images.push_back(v + p1.size());
  return Permutation::from_images(std::move(images));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> images(static_cast<std::size_t>(p.size()));
  for (int i = 1; i <= p.size(); ++i)
    images[static_cast<std::size_t>(p(i) - 1)] = i;
  return Permutation::from_images(std::move(images));
}

int preimage_of_one(const Permutation& p) {
  if (p.size() == 0) throw TypeError("empty permutation has no preimage of 1");
  for (int i = 1; i <= p.size(); ++i)
    if (p(i) == 1) return i;
  throw TypeError("corrupt permutation");
}

Permutation restrict_first(const Permutation& p) {
  if (p.size() == 0) throw TypeError("cannot restrict the empty permutation");
  int pre = preimage_of_one(p);
  std::vector<int> images;
  images.reserve(static_cast<std::size_t>(p.size() - 1));
  for (int i = 1; i < pre; ++i) images.push_back(p(i) - 1);
  for (int i = pre; i <= p.size() - 1; ++i) images.push_back(p(i + 1) - 1);
  return Permutation::from_images(std::move(images));
}

namespace {

Permutation swap_perm(int n, int m, SwapConvention conv) {
  std::vector<int> images;
  images.reserve(static_cast<std::size_t>(n + m));
  if (conv == SwapConvention::Block) {
    // (m+1, ..., m+n, 1, ..., m)
    for (int i = 1; i <= n; ++i) images.push_back(m + i);
    for (int j = 1; j <= m; ++j) images.push_back(j);
  } else {
    // (n+1, ..., n+m, 1, ..., n)
    for (int i = 1; i <= m; ++i) images.push_back(n + i);
    for (int j = 1; j <= n; ++j) images.push_back(j);
  }
  return Permutation::from_images(std::move(images));
}

}  // namespace

Permutation interpret(const TermPtr& t, SwapConvention conv) {
  switch (t->kind()) {
    case TermKind::Id:
      return Permutation::identity(t->id_width());
    case TermKind::Swap:
      return swap_perm(t->swap_n(), t->swap_m(), conv);
    case TermKind::Gen:
      throw SymmetryError("cannot interpret named generator " + t->gen_name() +
                          " as a permutation");
    case TermKind::Seq:
      return compose(interpret(t->right(), conv), interpret(t->left(), conv));
    case TermKind::Par:
      return dsum(interpret(t->left(), conv), interpret(t->right(), conv));
  }
  throw TypeError("corrupt term");
}

TermPtr toboggan(int d) {
  if (d < 1) throw TypeError("toboggan size must be >= 1");
  return swap_term(d - 1, 1);
}

TermPtr cf(const Permutation& p) {
  if (p.size() == 0) return id_term(0);
  if (p.size() == 1) return id_term(1);
  TermPtr rest = par_nf(id_term(1), cf(restrict_first(p)));
  if (p(1) == 1) return rest;
  int pre = preimage_of_one(p);
  TermPtr lift = layer_term(0, p.size() - pre, GenRef::swap(pre - 1, 1));
  return seq_nf(lift, rest);
}

std::string print_permutation(const Permutation& p) {
  std::string out = "(";
  for (int i = 1; i <= p.size(); ++i) {
    if (i > 1) out += ",";
    out += std::to_string(p(i));
  }
  return out + ")";
}

Permutation parse_permutation(const std::string& text) {
  std::size_t begin = text.find('(');
  std::size_t end = text.rfind(')');
  if (begin == std::string::npos || end == std::string::npos || end < begin)
    throw ParseError("expected a parenthesized image list", 0);
  std::string body = text.substr(begin + 1, end - begin - 1);
  std::vector<int> images;
  std::istringstream in(body);
  std::string field;
  while (std::getline(in, field, ',')) {
    try {
      images.push_back(std::stoi(field));
    } catch (const std::exception&) {
      throw ParseError("bad permutation image: " + field, 0);
    }
  }
  return Permutation::from_images(std::move(images));
}

}  // namespace diagre
