#include "tlcat/tl_category.hpp"

#include <memory>
#include <stdexcept>

namespace tlcat {

SumObject word_obj(Word w) { return SumObject{{std::move(w)}}; }

SumObject unit_obj() { return SumObject{{Word{}}}; }

TLCat& TLCat::get(const Level& level) {
  static std::map<int, std::unique_ptr<TLCat>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(level.k());
  if (it == cache.end()) {
    it = cache.emplace(level.k(), std::unique_ptr<TLCat>(new TLCat(level)))
             .first;
  }
  return *it->second;
}

SumObject TLCat::dual(const SumObject& x) const {
  SumObject r;
  r.words.reserve(x.words.size());
  for (const auto& w : x.words) r.words.emplace_back(w.rbegin(), w.rend());
  return r;
}

SumObject TLCat::tensor(const SumObject& x, const SumObject& y) const {
  SumObject r;
  r.words.reserve(x.words.size() * y.words.size());
  for (const auto& a : x.words) {
    for (const auto& b : y.words) {
      Word w = a;
      w.insert(w.end(), b.begin(), b.end());
      r.words.push_back(std::move(w));
    }
  }
  return r;
}

std::vector<int> TLCat::fusion(int a, int b) const {
  const int k = level_->k();
  if (a < 0 || a > k || b < 0 || b > k)
    throw std::invalid_argument("fusion label out of range");
  std::vector<int> out;
  int lo = a > b ? a - b : b - a;
  int hi = std::min(a + b, 2 * k - a - b);
  for (int m = lo; m <= hi; m += 2) out.push_back(m);
  return out;
}

const TLMorphism& TLCat::vertex_in(int a, int b, int m) {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto key = std::make_tuple(a, b, m);
  auto it = vin_.find(key);
  if (it != vin_.end()) return it->second;

  auto adm = fusion(a, b);
  if (std::find(adm.begin(), adm.end(), m) == adm.end())
    throw std::invalid_argument("inadmissible vertex");
  const Level& L = *level_;
  int x = (a + m - b) / 2;
  int w = (a + b - m) / 2;
  TLMorphism mid = w == 0 ? TLMorphism::identity(L, m)
                          : TLMorphism::from_diagram(
                              L, PlanarDiagram::iterated_cup(x, w, m));
  TLMorphism v = tlcat::compose(tlcat::tensor(jw(L, a), jw(L, b)),
                                tlcat::compose(mid, jw(L, m)));
  return vin_.emplace(key, std::move(v)).first->second;
}

const TLMorphism& TLCat::vertex_out(int a, int b, int m) {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto key = std::make_tuple(a, b, m);
  auto it = vout_.find(key);
  if (it != vout_.end()) return it->second;

  const Level& L = *level_;
  const TLMorphism& vin = vertex_in(a, b, m);
  int x = (a + m - b) / 2;
  int w = (a + b - m) / 2;
  TLMorphism mid = w == 0 ? TLMorphism::identity(L, m)
                          : TLMorphism::from_diagram(
                              L, PlanarDiagram::iterated_cap(x, w, m));
  TLMorphism raw = tlcat::compose(
      jw(L, m), tlcat::compose(mid, tlcat::tensor(jw(L, a), jw(L, b))));
  CycNum s = tlcat::compose(raw, vin).coeff(PlanarDiagram::identity(m));
  if (s.is_zero())
    throw std::logic_error("vertex normalization vanished on admissible data");
  TLMorphism v = raw.scaled(s.inv());
  return vout_.emplace(key, std::move(v)).first->second;
}

const std::vector<TLCat::BranchData>& TLCat::branches(const Word& w) {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto it = branches_.find(w);
  if (it != branches_.end()) return it->second;

  const Level& L = *level_;
  std::vector<BranchData> out;
  if (w.empty()) {
    out.push_back(BranchData{{0}, -1, TLMorphism::identity(L, 0),
                             TLMorphism::identity(L, 0)});
  } else {
    Word prefix(w.begin(), w.end() - 1);
    int y = w.back();
    if (y < 0 || y > L.k())
      throw std::invalid_argument("word label out of range for splitting");
    const auto& prev = branches(prefix);
    TLMorphism idy = TLMorphism::identity(L, y);
    for (size_t p = 0; p < prev.size(); ++p) {
      int c = prev[p].path.back();
      for (int m : fusion(c, y)) {
        BranchData b;
        b.path = prev[p].path;
        b.path.push_back(m);
        b.parent = static_cast<int>(p);
        b.incl = tlcat::compose(tlcat::tensor(prev[p].incl, idy),
                                vertex_in(c, y, m));
        b.proj = tlcat::compose(vertex_out(c, y, m),
                                tlcat::tensor(prev[p].proj, idy));
        out.push_back(std::move(b));
      }
    }
  }
  return branches_.emplace(w, std::move(out)).first->second;
}

std::vector<TLCat::Slot> TLCat::slots(const SumObject& x) {
  std::vector<Slot> out;
  for (size_t wi = 0; wi < x.words.size(); ++wi) {
    const auto& br = branches(x.words[wi]);
    for (size_t bi = 0; bi < br.size(); ++bi) {
      out.push_back(Slot{static_cast<int>(wi), static_cast<int>(bi),
                         br[bi].path.back()});
    }
  }
  return out;
}

TLCat::Mor TLCat::id(const SumObject& x) {
  int n = static_cast<int>(slots(x).size());
  return Mor{x, x, Mat::identity(level_->field(), n)};
}

TLCat::Mor TLCat::zero(const SumObject& src, const SumObject& dst) {
  int r = static_cast<int>(slots(dst).size());
  int c = static_cast<int>(slots(src).size());
  return Mor{src, dst, Mat(level_->field(), r, c)};
}

TLCat::Mor TLCat::compose(const Mor& g, const Mor& f) {
  if (!(g.src == f.dst))
    throw std::invalid_argument("category compose: object mismatch");
  return Mor{f.src, g.dst, g.m * f.m};
}

TLCat::Mor TLCat::add(const Mor& f, const Mor& g) {
  if (!(f.src == g.src && f.dst == g.dst))
    throw std::invalid_argument("category add: object mismatch");
  return Mor{f.src, f.dst, f.m + g.m};
}

TLCat::Mor TLCat::sub(const Mor& f, const Mor& g) {
  if (!(f.src == g.src && f.dst == g.dst))
    throw std::invalid_argument("category sub: object mismatch");
  return Mor{f.src, f.dst, f.m - g.m};
}

TLCat::Mor TLCat::scale(const CycNum& c, const Mor& f) {
  return Mor{f.src, f.dst, f.m.scaled(c)};
}

// Appending one identity letter on the right: the new branches are
// (old branch, fused label), and coordinates carry over block-diagonally.
TLCat::Mor TLCat::tensor_right_word_step(const Mor& f, int y) {
  SumObject src2 = tensor(f.src, word_obj({y}));
  SumObject dst2 = tensor(f.dst, word_obj({y}));
  auto ssl = slots(f.src);
  auto dsl = slots(f.dst);
  auto ssl2 = slots(src2);
  auto dsl2 = slots(dst2);
  // slot offsets of the old objects
  std::vector<int> soff(f.src.words.size() + 1, 0);
  for (size_t i = 0; i < ssl.size(); ++i) soff[ssl[i].word + 1]++;
  for (size_t i = 1; i < soff.size(); ++i) soff[i] += soff[i - 1];
  std::vector<int> doff(f.dst.words.size() + 1, 0);
  for (size_t i = 0; i < dsl.size(); ++i) doff[dsl[i].word + 1]++;
  for (size_t i = 1; i < doff.size(); ++i) doff[i] += doff[i - 1];

  Mat m(level_->field(), static_cast<int>(dsl2.size()),
        static_cast<int>(ssl2.size()));
  for (size_t r = 0; r < dsl2.size(); ++r) {
    const auto& brd = branches(dst2.words[dsl2[r].word])[dsl2[r].branch];
    for (size_t c = 0; c < ssl2.size(); ++c) {
      const auto& brs = branches(src2.words[ssl2[c].word])[ssl2[c].branch];
      if (dsl2[r].label != ssl2[c].label) continue;
      int pr = doff[dsl2[r].word] + brd.parent;
      int pc = soff[ssl2[c].word] + brs.parent;
      m.at(static_cast<int>(r), static_cast<int>(c)) = f.m.at(pr, pc);
    }
  }
  return Mor{std::move(src2), std::move(dst2), std::move(m)};
}

TLCat::Mor TLCat::tensor_right(const Mor& f, const SumObject& z) {
  if (z.words.size() == 1) {
    Mor acc = f;
    for (int y : z.words[0]) acc = tensor_right_word_step(acc, y);
    return acc;
  }
  // assemble blockwise over the summands of z
  SumObject src2 = tensor(f.src, z);
  SumObject dst2 = tensor(f.dst, z);
  Mor out = zero(src2, dst2);
  auto ssl2 = slots(src2);
  auto dsl2 = slots(dst2);
  const size_t nz = z.words.size();
  for (size_t zi = 0; zi < nz; ++zi) {
    Mor piece = tensor_right(f, word_obj(z.words[zi]));
    auto psl_src = slots(piece.src);
    auto psl_dst = slots(piece.dst);
    // map piece word indices (i) to pair indices (i, zi)
    auto locate = [&](const std::vector<Slot>& big, int small_word,
                      int small_branch, size_t stride_index) {
      int big_word = small_word * static_cast<int>(nz) +
                     static_cast<int>(stride_index);
      for (size_t s = 0; s < big.size(); ++s) {
        if (big[s].word == big_word && big[s].branch == small_branch)
          return static_cast<int>(s);
      }
      throw std::logic_error("tensor_right: slot not found");
    };
    for (size_t r = 0; r < psl_dst.size(); ++r) {
      for (size_t c = 0; c < psl_src.size(); ++c) {
        const CycNum& v = piece.m.at(static_cast<int>(r), static_cast<int>(c));
        if (v.is_zero()) continue;
        int R = locate(dsl2, psl_dst[r].word, psl_dst[r].branch, zi);
        int C = locate(ssl2, psl_src[c].word, psl_src[c].branch, zi);
        out.m.at(R, C) = v;
      }
    }
  }
  return out;
}

const TLCat::LTData& TLCat::lt_data(int j, const Word& w) {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto key = std::make_pair(j, w);
  auto it = lt_.find(key);
  if (it != lt_.end()) return it->second;

  const CycField& F = level_->field();
  LTData data{Mat(F, 0, 0), Mat(F, 0, 0)};
  if (w.empty()) {
    data.psi = Mat(F, 1, 1);
    data.phib = Mat(F, 1, 1);
    data.psi.at(0, 0) = level_->one();
    data.phib.at(0, 0) = level_->one();
  } else {
    Word prefix(w.begin(), w.end() - 1);
    int y = w.back();
    const LTData& prev = lt_data(j, prefix);
    Word jw_prefix = prefix;
    jw_prefix.insert(jw_prefix.begin(), j);
    Word jw_full = w;
    jw_full.insert(jw_full.begin(), j);
    const auto& rows_prev = branches(jw_prefix);
    const auto& cols_prev = branches(prefix);
    const auto& rows = branches(jw_full);
    const auto& cols = branches(w);
    data.psi = Mat(F, static_cast<int>(rows.size()),
                   static_cast<int>(cols.size()));
    data.phib = Mat(F, static_cast<int>(rows.size()),
                    static_cast<int>(cols.size()));
    for (size_t r = 0; r < rows.size(); ++r) {
      int c_mid = rows_prev[rows[r].parent].path.back();
      int cp = rows[r].path.back();
      for (size_t c = 0; c < cols.size(); ++c) {
        int a_mid = cols_prev[cols[c].parent].path.back();
        int ap = cols[c].path.back();
        const CycNum& psi_prev =
            prev.psi.at(rows[r].parent, cols[c].parent);
        if (!psi_prev.is_zero()) {
          // the final overlap lives in Hom(F_cp, F_j x F_ap)
          auto adm = fusion(j, ap);
          if (std::find(adm.begin(), adm.end(), cp) != adm.end()) {
            CycNum six = six_psi(j, a_mid, y, c_mid, ap, cp);
            if (!six.is_zero())
              data.psi.at(static_cast<int>(r), static_cast<int>(c)) =
                  psi_prev * six;
          }
        }
        const CycNum& phib_prev =
            prev.phib.at(rows[r].parent, cols[c].parent);
        if (!phib_prev.is_zero()) {
          auto adm = fusion(j, ap);
          if (std::find(adm.begin(), adm.end(), cp) != adm.end()) {
            CycNum six = six_phi(j, a_mid, y, c_mid, ap, cp);
            if (!six.is_zero())
              data.phib.at(static_cast<int>(r), static_cast<int>(c)) =
                  phib_prev * six;
          }
        }
      }
    }
  }
  return lt_.emplace(std::move(key), std::move(data)).first->second;
}

CycNum TLCat::coeff_against_in(const TLMorphism& t, int a, int b, int m) {
  // t is a multiple of vertex_in(a,b,m); out o in = f_m has identity
  // coefficient 1, so the multiple is the identity coefficient here.
  return tlcat::compose(vertex_out(a, b, m), t)
      .coeff(PlanarDiagram::identity(m));
}

CycNum TLCat::coeff_against_out(const TLMorphism& t, int a, int b, int m) {
  return tlcat::compose(t, vertex_in(a, b, m))
      .coeff(PlanarDiagram::identity(m));
}

CycNum TLCat::six_psi(int j, int a, int y, int c, int ap, int cp) {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  std::array<int, 6> key{j, a, y, c, ap, cp};
  auto it = sixpsi_.find(key);
  if (it != sixpsi_.end()) return it->second;
  const Level& L = *level_;
  TLMorphism t = tlcat::compose(
      tlcat::tensor(TLMorphism::identity(L, j), vertex_out(a, y, ap)),
      tlcat::compose(
          tlcat::tensor(vertex_in(j, a, c), TLMorphism::identity(L, y)),
          vertex_in(c, y, cp)));
  CycNum v = coeff_against_in(t, j, ap, cp);
  sixpsi_.emplace(key, v);
  return v;
}

CycNum TLCat::six_phi(int j, int a, int y, int c, int ap, int cp) {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  std::array<int, 6> key{j, a, y, c, ap, cp};
  auto it = sixphi_.find(key);
  if (it != sixphi_.end()) return it->second;
  const Level& L = *level_;
  TLMorphism t = tlcat::compose(
      vertex_out(c, y, cp),
      tlcat::compose(
          tlcat::tensor(vertex_out(j, a, c), TLMorphism::identity(L, y)),
          tlcat::tensor(TLMorphism::identity(L, j), vertex_in(a, y, ap))));
  CycNum v = coeff_against_out(t, j, ap, cp);
  sixphi_.emplace(key, v);
  return v;
}

TLCat::Mor TLCat::tensor_left_word_step(int j, const Mor& f) {
  SumObject src2, dst2;
  for (const auto& w : f.src.words) {
    Word nw = w;
    nw.insert(nw.begin(), j);
    src2.words.push_back(std::move(nw));
  }
  for (const auto& w : f.dst.words) {
    Word nw = w;
    nw.insert(nw.begin(), j);
    dst2.words.push_back(std::move(nw));
  }
  auto ssl = slots(f.src);
  auto dsl = slots(f.dst);
  auto ssl2 = slots(src2);
  auto dsl2 = slots(dst2);
  Mat m(level_->field(), static_cast<int>(dsl2.size()),
        static_cast<int>(ssl2.size()));
  // per (dst word, src word) block: phib * M_block * psi^T
  for (size_t dw = 0; dw < f.dst.words.size(); ++dw) {
    const LTData& ltd = lt_data(j, f.dst.words[dw]);
    for (size_t sw = 0; sw < f.src.words.size(); ++sw) {
      const LTData& lts = lt_data(j, f.src.words[sw]);
      // gather block of f
      int nr = ltd.phib.cols();  // branches of dst word
      int nc = lts.psi.cols();   // branches of src word
      Mat block(level_->field(), nr, nc);
      for (size_t r = 0; r < dsl.size(); ++r) {
        if (dsl[r].word != static_cast<int>(dw)) continue;
        for (size_t c = 0; c < ssl.size(); ++c) {
          if (ssl[c].word != static_cast<int>(sw)) continue;
          block.at(dsl[r].branch, ssl[c].branch) =
              f.m.at(static_cast<int>(r), static_cast<int>(c));
        }
      }
      Mat nb = ltd.phib * block * lts.psi.transpose();
      // The overlap matrices are not label-graded on their own; the
      // orthogonality of distinct simples kills mismatched entries, so
      // mask them rather than trusting the raw product there.
      for (size_t r = 0; r < dsl2.size(); ++r) {
        if (dsl2[r].word != static_cast<int>(dw)) continue;
        for (size_t c = 0; c < ssl2.size(); ++c) {
          if (ssl2[c].word != static_cast<int>(sw)) continue;
          if (dsl2[r].label != ssl2[c].label) continue;
          m.at(static_cast<int>(r), static_cast<int>(c)) =
              nb.at(dsl2[r].branch, ssl2[c].branch);
        }
      }
    }
  }
  return Mor{std::move(src2), std::move(dst2), std::move(m)};
}

TLCat::Mor TLCat::tensor_left(const SumObject& z, const Mor& f) {
  if (z.words.size() == 1) {
    Mor acc = f;
    const Word& w = z.words[0];
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      acc = tensor_left_word_step(*it, acc);
    }
    return acc;
  }
  SumObject src2 = tensor(z, f.src);
  SumObject dst2 = tensor(z, f.dst);
  Mor out = zero(src2, dst2);
  auto ssl2 = slots(src2);
  auto dsl2 = slots(dst2);
  const size_t ns = f.src.words.size();
  const size_t nd = f.dst.words.size();
  for (size_t zi = 0; zi < z.words.size(); ++zi) {
    Mor piece = tensor_left(word_obj(z.words[zi]), f);
    auto psl_src = slots(piece.src);
    auto psl_dst = slots(piece.dst);
    auto locate = [&](const std::vector<Slot>& big, size_t n_inner,
                      int small_word, int small_branch) {
      int big_word = static_cast<int>(zi * n_inner) + small_word;
      for (size_t s = 0; s < big.size(); ++s) {
        if (big[s].word == big_word && big[s].branch == small_branch)
          return static_cast<int>(s);
      }
      throw std::logic_error("tensor_left: slot not found");
    };
    for (size_t r = 0; r < psl_dst.size(); ++r) {
      for (size_t c = 0; c < psl_src.size(); ++c) {
        const CycNum& v = piece.m.at(static_cast<int>(r), static_cast<int>(c));
        if (v.is_zero()) continue;
        int R = locate(dsl2, nd, psl_dst[r].word, psl_dst[r].branch);
        int C = locate(ssl2, ns, psl_src[c].word, psl_src[c].branch);
        out.m.at(R, C) = v;
      }
    }
  }
  return out;
}

TLCat::Mor TLCat::tensor_mor(const Mor& f, const Mor& g) {
  // f x g = (f x 1) o (1 x g)
  Mor right = tensor_left(f.src, g);
  Mor left = tensor_right(f, g.dst);
  return compose(left, right);
}

TLCat::Mor TLCat::ev_word(const Word& w) {
  {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto it = ev_cache_.find(w);
    if (it != ev_cache_.end()) return it->second;
  }
  const Level& L = *level_;
  Mor result = id(unit());
  if (!w.empty()) {
    int y = w.back();
    Word prefix(w.begin(), w.end() - 1);
    auto [e, c] = eval_coev(L, y);
    Mor ey = to_split(e);
    if (prefix.empty()) {
      result = ey;
    } else {
      Mor inner = ev_word(prefix);
      Mor mid = tensor_left(word_obj({y}),
                            tensor_right(inner, word_obj({y})));
      result = compose(ey, mid);
    }
  }
  std::lock_guard<std::recursive_mutex> lock(mu_);
  return ev_cache_.emplace(w, std::move(result)).first->second;
}

TLCat::Mor TLCat::coev_word(const Word& w) {
  {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto it = coev_cache_.find(w);
    if (it != coev_cache_.end()) return it->second;
  }
  const Level& L = *level_;
  Mor result = id(unit());
  if (!w.empty()) {
    int y = w.back();
    Word prefix(w.begin(), w.end() - 1);
    auto [e, c] = eval_coev(L, y);
    Mor cy = to_split(c);
    if (prefix.empty()) {
      result = cy;
    } else {
      Word rev_prefix(prefix.rbegin(), prefix.rend());
      Mor mid = tensor_left(word_obj(prefix),
                            tensor_right(cy, word_obj(rev_prefix)));
      result = compose(mid, coev_word(prefix));
    }
  }
  std::lock_guard<std::recursive_mutex> lock(mu_);
  return coev_cache_.emplace(w, std::move(result)).first->second;
}

TLCat::Mor TLCat::ev(const SumObject& x) {
  // source: dual(x) tensor x; only the diagonal word pairs contribute
  SumObject src = tensor(dual(x), x);
  Mor out = zero(src, unit());
  auto ssl = slots(src);
  const size_t n = x.words.size();
  for (size_t i = 0; i < n; ++i) {
    Mor piece = ev_word(x.words[i]);
    auto psl = slots(piece.src);
    int pair_word = static_cast<int>(i * n + i);
    for (size_t c = 0; c < psl.size(); ++c) {
      const CycNum& v = piece.m.at(0, static_cast<int>(c));
      if (v.is_zero()) continue;
      for (size_t s = 0; s < ssl.size(); ++s) {
        if (ssl[s].word == pair_word && ssl[s].branch == psl[c].branch) {
          out.m.at(0, static_cast<int>(s)) = v;
          break;
        }
      }
    }
  }
  return out;
}

TLCat::Mor TLCat::coev(const SumObject& x) {
  SumObject dst = tensor(x, dual(x));
  Mor out = zero(unit(), dst);
  auto dsl = slots(dst);
  const size_t n = x.words.size();
  for (size_t i = 0; i < n; ++i) {
    Mor piece = coev_word(x.words[i]);
    auto psl = slots(piece.dst);
    int pair_word = static_cast<int>(i * n + i);
    for (size_t r = 0; r < psl.size(); ++r) {
      const CycNum& v = piece.m.at(static_cast<int>(r), 0);
      if (v.is_zero()) continue;
      for (size_t s = 0; s < dsl.size(); ++s) {
        if (dsl[s].word == pair_word && dsl[s].branch == psl[r].branch) {
          out.m.at(static_cast<int>(s), 0) = v;
          break;
        }
      }
    }
  }
  return out;
}

TLCat::Mor TLCat::dual_mor(const Mor& f) {
  // f^dual = (ev(dst) x 1) o (1 x f x 1) o (1 x coev(src))
  SumObject xd = dual(f.src);
  SumObject yd = dual(f.dst);
  Mor start = tensor_left(yd, coev(f.src));
  Mor mid = tensor_left(yd, tensor_right(f, xd));
  Mor finish = tensor_right(ev(f.dst), xd);
  return compose(finish, compose(mid, start));
}

bool TLCat::equal(const Mor& f, const Mor& g) const {
  return f.src == g.src && f.dst == g.dst && f.m == g.m;
}

std::vector<TLCat::Mor> TLCat::hom_basis(const SumObject& x,
                                         const SumObject& y) {
  auto xs = slots(x);
  auto ys = slots(y);
  std::vector<Mor> out;
  for (size_t r = 0; r < ys.size(); ++r) {
    for (size_t c = 0; c < xs.size(); ++c) {
      if (ys[r].label != xs[c].label) continue;
      Mor b = zero(x, y);
      b.m.at(static_cast<int>(r), static_cast<int>(c)) = level_->one();
      out.push_back(std::move(b));
    }
  }
  return out;
}

TLCat::Inverted TLCat::invert(const Mor& f) {
  auto xs = slots(f.src);
  auto ys = slots(f.dst);
  // isotypic blocks per label
  std::map<int, std::pair<std::vector<int>, std::vector<int>>> blocks;
  for (size_t c = 0; c < xs.size(); ++c)
    blocks[xs[c].label].first.push_back(static_cast<int>(c));
  for (size_t r = 0; r < ys.size(); ++r)
    blocks[ys[r].label].second.push_back(static_cast<int>(r));

  Inverted result;
  Mat inv(level_->field(), static_cast<int>(xs.size()),
          static_cast<int>(ys.size()));
  for (const auto& [label, rc] : blocks) {
    const auto& [cols, rows] = rc;
    if (cols.empty() && rows.empty()) continue;
    if (cols.size() != rows.size()) {
      result.defect += static_cast<int>(
          std::max(cols.size(), rows.size()) - std::min(cols.size(),
                                                        rows.size()));
      continue;
    }
    Mat b(level_->field(), static_cast<int>(rows.size()),
          static_cast<int>(cols.size()));
    for (size_t i = 0; i < rows.size(); ++i)
      for (size_t j = 0; j < cols.size(); ++j)
        b.at(static_cast<int>(i), static_cast<int>(j)) =
            f.m.at(rows[i], cols[j]);
    auto binv = b.inverse();
    if (!binv) {
      result.defect += static_cast<int>(rows.size()) - b.rank();
      continue;
    }
    for (size_t i = 0; i < cols.size(); ++i)
      for (size_t j = 0; j < rows.size(); ++j)
        inv.at(cols[i], rows[j]) =
            binv->at(static_cast<int>(i), static_cast<int>(j));
  }
  if (result.defect == 0) {
    result.inverse = Mor{f.dst, f.src, std::move(inv)};
  }
  return result;
}

TLCat::Mor TLCat::to_split(const ProjMorphism& f) {
  SumObject src = word_obj(f.src().word());
  SumObject dst = word_obj(f.dst().word());
  const auto& sb = branches(f.src().word());
  const auto& db = branches(f.dst().word());
  Mat m(level_->field(), static_cast<int>(db.size()),
        static_cast<int>(sb.size()));
  for (size_t r = 0; r < db.size(); ++r) {
    for (size_t c = 0; c < sb.size(); ++c) {
      int lr = db[r].path.back();
      if (lr != sb[c].path.back()) continue;
      TLMorphism t = tlcat::compose(
          db[r].proj, tlcat::compose(f.map(), sb[c].incl));
      m.at(static_cast<int>(r), static_cast<int>(c)) =
          t.coeff(PlanarDiagram::identity(lr));
    }
  }
  return Mor{std::move(src), std::move(dst), std::move(m)};
}

ProjMorphism TLCat::to_raw_block(const Mor& f, int dst_word, int src_word) {
  const Level& L = *level_;
  const Word& sw = f.src.words[src_word];
  const Word& dw = f.dst.words[dst_word];
  const auto& sb = branches(sw);
  const auto& db = branches(dw);
  auto ssl = slots(f.src);
  auto dsl = slots(f.dst);
  ProjObject src(L, sw);
  ProjObject dst(L, dw);
  TLMorphism acc(L, src.strands(), dst.strands());
  for (size_t r = 0; r < dsl.size(); ++r) {
    if (dsl[r].word != dst_word) continue;
    for (size_t c = 0; c < ssl.size(); ++c) {
      if (ssl[c].word != src_word) continue;
      const CycNum& v = f.m.at(static_cast<int>(r), static_cast<int>(c));
      if (v.is_zero()) continue;
      acc = acc + tlcat::compose(db[dsl[r].branch].incl,
                                 sb[ssl[c].branch].proj)
                      .scaled(v);
    }
  }
  return ProjMorphism(src, dst, acc);
}

bool TLCat::quotient_zero(const ProjMorphism& f) {
  return to_split(f).m.is_zero();
}

}  // namespace tlcat
