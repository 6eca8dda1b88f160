#include <bit>
#include <chrono>
#include <cstdint>
#include <sstream>

#include "domtri/domination.h"
#include "domtri/error.h"

namespace domtri {

namespace {

using Mask = std::uint64_t;

int popcount(Mask m) { return std::popcount(m); }
int lowest(Mask m) { return std::countr_zero(m); }

class SearchBase {
 protected:
  SearchBase(const PlaneGraph& g, const OracleLimit& limit, const char* name)
      : n_(g.vertex_count()), limit_(limit), start_(std::chrono::steady_clock::now()) {
    if (n_ > limit.max_vertices || n_ > 64) {
      std::ostringstream os;
      os << name << ": " << n_ << " vertices exceeds the limit of " << std::min(limit.max_vertices, 64);
      throw OracleLimitExceeded(os.str());
    }
    closed_.assign(n_, 0);
    for (VertexId v = 0; v < n_; ++v) {
      closed_[v] = Mask{1} << v;
      for (VertexId w : g.rotation(v)) closed_[v] |= Mask{1} << w;
      max_closed_ = std::max(max_closed_, popcount(closed_[v]));
    }
    all_ = n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
    name_ = name;
  }

  void tick() {
    ++nodes_;
    if (nodes_ > limit_.max_nodes) throw OracleLimitExceeded(std::string(name_) + ": node budget exhausted");
    if (limit_.time_budget.count() > 0 && (nodes_ & 0x3ff) == 0 &&
        std::chrono::steady_clock::now() - start_ > limit_.time_budget)
      throw OracleLimitExceeded(std::string(name_) + ": time budget exhausted");
  }

  // Every vertex covers at most max_closed_ undominated vertices.
  int lower_bound(Mask undominated) const {
    return (popcount(undominated) + max_closed_ - 1) / max_closed_;
  }

  DominationResult result(DominationMethod m) const {
    DominationResult r;
    r.method = m;
    r.set = VertexSet::from_mask(best_);
    r.size = best_size_;
    r.search_nodes = nodes_;
    return r;
  }

  int n_;
  OracleLimit limit_;
  std::chrono::steady_clock::time_point start_;
  std::vector<Mask> closed_;
  int max_closed_ = 1;
  Mask all_ = 0;
  const char* name_ = "";
  long long nodes_ = 0;
  Mask best_ = 0;
  int best_size_ = 0;
};

class IotaSearch : SearchBase {
 public:
  IotaSearch(const PlaneGraph& g, const OracleLimit& limit) : SearchBase(g, limit, "exact_iota") {}

  DominationResult run() {
    if (n_ == 0) return result(DominationMethod::ExactIota);
    seed_upper_bound();
    search(0, 0, 0, 0);
    return result(DominationMethod::ExactIota);
  }

 private:
  // Greedy: repeatedly take the candidate that dominates the most new vertices.
  void seed_upper_bound() {
    Mask chosen = 0, dominated = 0;
    while (dominated != all_) {
      int pick = -1, gain = -1;
      for (VertexId v = 0; v < n_; ++v) {
        if (dominated >> v & 1) continue;
        const int g = popcount(closed_[v] & ~dominated);
        if (g > gain) {
          gain = g;
          pick = v;
        }
      }
      chosen |= Mask{1} << pick;
      dominated |= closed_[pick];
    }
    best_ = chosen;
    best_size_ = popcount(chosen);
  }

  // Candidates are undominated vertices that have not been excluded.
  void search(Mask chosen, int size, Mask dominated, Mask excluded) {
    tick();
    const Mask undominated = all_ & ~dominated;
    if (undominated == 0) {
      if (size < best_size_) {
        best_size_ = size;
        best_ = chosen;
      }
      return;
    }
    if (size + lower_bound(undominated) >= best_size_) return;
    const Mask candidates = undominated & ~excluded;
    int pivot = -1, options = 65;
    for (Mask m = undominated; m; m &= m - 1) {
      const int v = lowest(m);
      const int c = popcount(closed_[v] & candidates);
      if (c < options) {
        options = c;
        pivot = v;
        if (c == 0) return;
      }
    }
    Mask branch = closed_[pivot] & candidates;
    Mask banned = excluded;
    while (branch) {
      const int w = lowest(branch);
      branch &= branch - 1;
      search(chosen | Mask{1} << w, size + 1, dominated | closed_[w], banned);
      banned |= Mask{1} << w;
      if (size + 1 >= best_size_) return;
    }
  }
};

class GammaSearch : SearchBase {
 public:
  GammaSearch(const PlaneGraph& g, const OracleLimit& limit) : SearchBase(g, limit, "exact_gamma") {}

  DominationResult run() {
    if (n_ == 0) return result(DominationMethod::ExactGamma);
    seed_upper_bound();
    search(0, 0, 0, 0);
    return result(DominationMethod::ExactGamma);
  }

 private:
  void seed_upper_bound() {
    Mask chosen = 0, dominated = 0;
    while (dominated != all_) {
      int pick = -1, gain = -1;
      for (VertexId v = 0; v < n_; ++v) {
        const int g = popcount(closed_[v] & ~dominated);
        if (g > gain) {
          gain = g;
          pick = v;
        }
      }
      chosen |= Mask{1} << pick;
      dominated |= closed_[pick];
    }
    best_ = chosen;
    best_size_ = popcount(chosen);
  }

  void search(Mask chosen, int size, Mask dominated, Mask excluded) {
    tick();
    const Mask undominated = all_ & ~dominated;
    if (undominated == 0) {
      if (size < best_size_) {
        best_size_ = size;
        best_ = chosen;
      }
      return;
    }
    if (size + lower_bound(undominated) >= best_size_) return;
    const int v = lowest(undominated);
    Mask branch = closed_[v] & ~excluded;
    Mask banned = excluded;
    while (branch) {
      const int w = lowest(branch);
      branch &= branch - 1;
      search(chosen | Mask{1} << w, size + 1, dominated | closed_[w], banned);
      banned |= Mask{1} << w;
      if (size + 1 >= best_size_) return;
    }
  }
};

}  // namespace

DominationResult exact_iota(const PlaneGraph& g, const OracleLimit& limit) { return IotaSearch(g, limit).run(); }

DominationResult exact_gamma(const PlaneGraph& g, const OracleLimit& limit) {
  return GammaSearch(g, limit).run();
}

}  // namespace domtri
