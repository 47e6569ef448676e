#include "specsup/canonical.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "specsup/errors.hpp"

namespace specsup {

namespace {

using Cells = std::vector<std::vector<Vertex>>;

class Canonizer {
 public:
  Canonizer(const Graph& g, std::span<const int> colours) : g_(g), words_(g.words()) {
    const int n = g.n();
    colour_.assign(colours.begin(), colours.end());
    if (colour_.empty()) colour_.assign(n, 0);
    if (static_cast<int>(colour_.size()) != n) {
      throw ValidationError("colour vector length must equal vertex count");
    }
    mask_.assign(words_, 0);
    scratch_.assign(static_cast<std::size_t>(n) * words_, 0);
    best_.assign(static_cast<std::size_t>(n) * words_, 0);
    inv_.assign(n, 0);
  }

  CanonicalLabeling run() {
    const int n = g_.n();
    CanonicalLabeling out;
    out.form.n = n;
    if (n == 0) return out;

    std::vector<Vertex> by_colour(n);
    std::iota(by_colour.begin(), by_colour.end(), 0);
    std::stable_sort(by_colour.begin(), by_colour.end(),
                     [&](Vertex a, Vertex b) { return colour_[a] < colour_[b]; });
    Cells cells;
    for (Vertex v : by_colour) {
      if (cells.empty() || colour_[cells.back().front()] != colour_[v]) cells.emplace_back();
      cells.back().push_back(v);
    }
    search(std::move(cells));

    out.order = best_order_;
    out.form.rows = best_;
    out.form.colours.resize(n);
    for (int i = 0; i < n; ++i) out.form.colours[i] = colour_[best_order_[i]];
    return out;
  }

 private:
  bool twins(Vertex u, Vertex v) const {
    auto a = g_.row(u);
    auto b = g_.row(v);
    for (int w = 0; w < words_; ++w) {
      std::uint64_t x = a[w] ^ b[w];
      if ((u >> 6) == w) x &= ~(std::uint64_t{1} << (u & 63));
      if ((v >> 6) == w) x &= ~(std::uint64_t{1} << (v & 63));
      if (x) return false;
    }
    return true;
  }

  // Splits cells until every vertex of a cell has the same number of
  // neighbours in every cell. New fragments are ordered by that count.
  void refine(Cells& cells) {
    bool changed = true;
    std::vector<std::pair<int, Vertex>> keyed;
    while (changed) {
      changed = false;
      for (std::size_t c = 0; c < cells.size() && !changed; ++c) {
        std::fill(mask_.begin(), mask_.end(), 0);
        for (Vertex v : cells[c]) mask_[v >> 6] |= std::uint64_t{1} << (v & 63);
        for (std::size_t x = 0; x < cells.size(); ++x) {
          if (cells[x].size() < 2) continue;
          keyed.clear();
          for (Vertex v : cells[x]) {
            auto r = g_.row(v);
            int cnt = 0;
            for (int w = 0; w < words_; ++w) cnt += std::popcount(r[w] & mask_[w]);
            keyed.emplace_back(cnt, v);
          }
          bool uniform = std::all_of(keyed.begin(), keyed.end(),
                                     [&](const auto& kv) { return kv.first == keyed.front().first; });
          if (uniform) continue;
          std::stable_sort(keyed.begin(), keyed.end(),
                           [](const auto& a, const auto& b) { return a.first < b.first; });
          Cells pieces;
          for (std::size_t i = 0; i < keyed.size(); ++i) {
            if (i == 0 || keyed[i].first != keyed[i - 1].first) pieces.emplace_back();
            pieces.back().push_back(keyed[i].second);
          }
          cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(x));
          cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(x), pieces.begin(), pieces.end());
          changed = true;
          break;
        }
      }
    }
  }

  void leaf(const Cells& cells) {
    const int n = g_.n();
    std::vector<Vertex> order;
    order.reserve(n);
    for (const auto& c : cells) order.push_back(c.front());
    for (int i = 0; i < n; ++i) inv_[order[i]] = i;

    // Build rows one at a time, abandoning as soon as the prefix is larger.
    int cmp = have_best_ ? 0 : -1;
    for (int i = 0; i < n; ++i) {
      std::uint64_t* row = scratch_.data() + static_cast<std::size_t>(i) * words_;
      std::fill(row, row + words_, 0);
      auto src = g_.row(order[i]);
      for (int w = 0; w < words_; ++w) {
        for (std::uint64_t bits = src[w]; bits; bits &= bits - 1) {
          int j = inv_[w * 64 + std::countr_zero(bits)];
          row[j >> 6] |= std::uint64_t{1} << (j & 63);
        }
      }
      if (cmp == 0) {
        const std::uint64_t* b = best_.data() + static_cast<std::size_t>(i) * words_;
        for (int w = 0; w < words_ && cmp == 0; ++w) {
          if (row[w] != b[w]) cmp = row[w] < b[w] ? -1 : 1;
        }
        if (cmp > 0) return;
      }
    }
    if (cmp < 0) {
      best_ = scratch_;
      best_order_ = std::move(order);
      have_best_ = true;
    }
  }

  void search(Cells cells) {
    refine(cells);
    std::size_t target = cells.size();
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (cells[c].size() > 1 && (target == cells.size() || cells[c].size() < cells[target].size())) {
        target = c;
      }
    }
    if (target == cells.size()) {
      leaf(cells);
      return;
    }
    std::vector<Vertex> tried;
    for (Vertex v : cells[target]) {
      if (std::any_of(tried.begin(), tried.end(), [&](Vertex u) { return twins(u, v); })) continue;
      tried.push_back(v);
      Cells next;
      next.reserve(cells.size() + 1);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c != target) {
          next.push_back(cells[c]);
          continue;
        }
        next.push_back({v});
        std::vector<Vertex> rest;
        for (Vertex u : cells[c]) {
          if (u != v) rest.push_back(u);
        }
        next.push_back(std::move(rest));
      }
      search(std::move(next));
    }
  }

  const Graph& g_;
  int words_;
  std::vector<int> colour_;
  std::vector<std::uint64_t> mask_;
  std::vector<std::uint64_t> scratch_;
  std::vector<std::uint64_t> best_;
  std::vector<Vertex> best_order_;
  std::vector<int> inv_;
  bool have_best_ = false;
};

}  // namespace

Graph CanonicalForm::to_graph() const {
  GraphBuilder b(n);
  const int words = (n + 63) / 64;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rows[static_cast<std::size_t>(i) * words + (j >> 6)] >> (j & 63) & 1U) b.add_edge(i, j);
    }
  }
  return std::move(b).build();
}

std::size_t CanonicalFormHash::operator()(const CanonicalForm& f) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(f.n);
  auto mix = [&](std::uint64_t x) {
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  for (auto w : f.rows) mix(w);
  for (int c : f.colours) mix(static_cast<std::uint64_t>(c));
  return static_cast<std::size_t>(h);
}

CanonicalLabeling canonical_labeling(const Graph& g, std::span<const int> colours) {
  return Canonizer(g, colours).run();
}

CanonicalForm canonical_form(const Graph& g, std::span<const int> colours) {
  return canonical_labeling(g, colours).form;
}

Graph canonical_graph(const Graph& g) { return canonical_form(g).to_graph(); }

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.n() != b.n() || a.m() != b.m()) return false;
  std::vector<int> da(a.n());
  std::vector<int> db(b.n());
  for (Vertex v = 0; v < a.n(); ++v) {
    da[v] = a.degree(v);
    db[v] = b.degree(v);
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace specsup
