#include "cospec/catalog.hpp"

#include <algorithm>
#include <stdexcept>

namespace cospec {

int SwitchFamily::dim() const {
  switch (tag) {
    case Tag::GM4: return 4;
    case Tag::GMn: return param;
    case Tag::SG: return param;
    case Tag::FANO: return 7;
    case Tag::CUBE: return 8;
    case Tag::WQH: return 2 * param;
  }
  throw std::logic_error("SwitchFamily::dim");
}

std::string SwitchFamily::name() const {
  switch (tag) {
    case Tag::GM4: return "gm4";
    case Tag::GMn: return "gm:" + std::to_string(param);
    case Tag::SG: return "sg:" + std::to_string(param);
    case Tag::FANO: return "fano";
    case Tag::CUBE: return "cube";
    case Tag::WQH: return "wqh:" + std::to_string(param);
  }
  throw std::logic_error("SwitchFamily::name");
}

SwitchFamily SwitchFamily::parse(const std::string& s) {
  auto param_of = [&](size_t prefix_len) {
    return std::stoi(s.substr(prefix_len));
  };
  if (s == "gm4") return {Tag::GM4};
  if (s == "fano") return {Tag::FANO};
  if (s == "cube") return {Tag::CUBE};
  if (s.rfind("gm:", 0) == 0) return {Tag::GMn, param_of(3)};
  if (s.rfind("sg:", 0) == 0) return {Tag::SG, param_of(3)};
  if (s.rfind("wqh:", 0) == 0) return {Tag::WQH, param_of(4)};
  throw std::invalid_argument("unknown switching family '" + s + "'");
}

namespace {

const Rational kHalf(1, 2);

RatMatrix block_circulant_halved(const std::vector<RatMatrix>& blocks) {
  int m = static_cast<int>(blocks.size());
  RatMatrix out(2 * m, 2 * m);
  for (int bi = 0; bi < m; ++bi)
    for (int bj = 0; bj < m; ++bj) {
      const RatMatrix& b = blocks[((bj - bi) % m + m) % m];
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          out.at(2 * bi + i, 2 * bj + j) = b.at(i, j) * kHalf;
    }
  return out;
}

RatMatrix cube_matrix() {
  RatMatrix i2 = RatMatrix::identity(2);
  RatMatrix z = RatMatrix::ones(2, 2) - i2;  // Z = J - I
  RatMatrix ni = i2.scaled(Rational(-1));
  RatMatrix nz = z.scaled(Rational(-1));
  const RatMatrix* layout[4][4] = {
      {&ni, &i2, &i2, &i2},
      {&i2, &nz, &i2, &z},
      {&i2, &z, &nz, &i2},
      {&i2, &i2, &z, &nz},
  };
  RatMatrix out(8, 8);
  for (int bi = 0; bi < 4; ++bi)
    for (int bj = 0; bj < 4; ++bj)
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          out.at(2 * bi + i, 2 * bj + j) = layout[bi][bj]->at(i, j) * kHalf;
  return out;
}

std::vector<RatMatrix> sg_first_block_row(int m, bool alternative) {
  RatMatrix j = RatMatrix::ones(2, 2);
  RatMatrix y = RatMatrix::identity(2).scaled(Rational(2)) - j;  // Y = 2I - J
  RatMatrix o = RatMatrix(2, 2);
  std::vector<RatMatrix> blocks(m, o);
  if (alternative) {
    blocks[0] = y;
    blocks[m - 2] = j;
  } else {
    blocks[0] = j;
    blocks[m - 1] = y;
  }
  return blocks;
}

}  // namespace

RatMatrix build(const SwitchFamily& f) {
  switch (f.tag) {
    case SwitchFamily::Tag::GM4:
      return RatMatrix::circulant({-kHalf, kHalf, kHalf, kHalf});
    case SwitchFamily::Tag::GMn: {
      int n = f.param;
      if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("gm:<n> requires even n >= 4");
      return RatMatrix::ones(n, n).scaled(Rational(2, n)) -
             RatMatrix::identity(n);
    }
    case SwitchFamily::Tag::SG: {
      int n = f.param;
      if (n < 6 || n % 2 != 0 || (n / 2) % 2 != 1)
        throw std::invalid_argument("sg:<n> requires n = 2m with odd m >= 3");
      return block_circulant_halved(sg_first_block_row(n / 2, false));
    }
    case SwitchFamily::Tag::FANO: {
      RatVector row = {-kHalf, kHalf, kHalf, Rational(0),
                       kHalf,  Rational(0), Rational(0)};
      return RatMatrix::circulant(row);
    }
    case SwitchFamily::Tag::CUBE:
      return cube_matrix();
    case SwitchFamily::Tag::WQH: {
      int p = f.param;
      if (p < 1) throw std::invalid_argument("wqh:<p> requires p >= 1");
      RatMatrix diag =
          RatMatrix::identity(p) - RatMatrix::ones(p, p).scaled(Rational(1, p));
      RatMatrix off = RatMatrix::ones(p, p).scaled(Rational(1, p));
      return RatMatrix::direct_sum(diag, diag) +
             [&] {
               RatMatrix anti(2 * p, 2 * p);
               for (int i = 0; i < p; ++i)
                 for (int j = 0; j < p; ++j) {
                   anti.at(i, p + j) = off.at(i, j);
                   anti.at(p + i, j) = off.at(i, j);
                 }
               return anti;
             }();
    }
  }
  throw std::logic_error("build: unhandled family");
}

RatMatrix build_sg_alternative(int n) {
  if (n < 6 || n % 2 != 0 || (n / 2) % 2 != 1)
    throw std::invalid_argument("sg alternative requires n = 2m with odd m >= 3");
  return block_circulant_halved(sg_first_block_row(n / 2, true));
}

RatMatrix embed(const RatMatrix& r, int n) {
  if (n < r.rows()) throw std::invalid_argument("embed: n < dim R");
  return RatMatrix::direct_sum(r, RatMatrix::identity(n - r.rows()));
}

std::vector<VqPair> vq(const RatMatrix& r) {
  int s = r.rows();
  if (s > 20) throw std::invalid_argument("vq: dimension capped at 20");
  RatMatrix rt = r.transpose();
  std::vector<VqPair> out;
  for (uint32_t mask = 0; mask < (uint32_t(1) << s); ++mask) {
    RatVector v(s);
    for (int i = 0; i < s; ++i)
      if (mask & (uint32_t(1) << i)) v[i] = Rational(1);
    RatVector img = rt.apply(v);
    bool zero_one = true;
    for (const auto& x : img)
      if (!(x == Rational(0) || x == Rational(1))) { zero_one = false; break; }
    if (!zero_one) continue;
    VqPair p;
    p.v.resize(s);
    p.image.resize(s);
    for (int i = 0; i < s; ++i) {
      p.v[i] = (mask >> i) & 1;
      p.image[i] = img[i] == Rational(1) ? 1 : 0;
    }
    out.push_back(std::move(p));
  }
  return out;
}

FanoData fano_lines_and_ovals() {
  FanoData data;
  std::vector<int> base_line = {0, 1, 3};  // v1, v2, v4
  std::vector<int> base_oval = {2, 4, 5};  // v3, v5, v6
  std::vector<std::vector<int>> f1_edges, f2_edges;
  for (int i = 0; i < 7; ++i) {
    std::vector<int> l, o;
    for (int v : base_line) l.push_back((v + i) % 7);
    for (int v : base_oval) o.push_back((v + i) % 7);
    std::sort(l.begin(), l.end());
    std::sort(o.begin(), o.end());
    data.lines.push_back(l);
    data.ovals.push_back(o);
    f1_edges.push_back(l);
    f2_edges.push_back(o);
  }
  data.f1 = Hypergraph::on_range(3, 7, f1_edges);
  data.f2 = Hypergraph::on_range(3, 7, f2_edges);
  return data;
}

}  // namespace cospec
