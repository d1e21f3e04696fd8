#include "nildist/distortion.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <deque>
#include <exception>
#include <optional>
#include <sstream>

#include "nildist/error.hpp"

namespace nildist {

std::size_t BallKeyHash::operator()(const BallKey& k) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (std::int64_t v : k) {
    h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

BallKey to_key(const Coords& v) {
  BallKey k(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    auto x = to_int64(v[i]);
    if (!x) throw CapExceeded("coordinate exceeds 64-bit ball key");
    k[i] = *x;
  }
  return k;
}

Coords from_key(const BallKey& k) {
  Coords v(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) v[i] = static_cast<long>(k[i]);
  return v;
}

std::vector<GroupElement> cayley_steps(const std::vector<Word>& gens,
                                       const PresentationPtr& p) {
  std::vector<GroupElement> steps;
  for (const Word& w : gens) {
    steps.push_back(embed(w, p));
    steps.push_back(embed(inverse(w), p));
  }
  return steps;
}

std::vector<Word> standard_generators(const Presentation& p) {
  std::vector<Word> gens;
  for (std::size_t g = 0; g < p.rank(); ++g) gens.push_back(Word{{g, 1}});
  return gens;
}

BallBuilder::BallBuilder(HallBasisPtr hall, std::vector<GroupElement> steps,
                         std::size_t max_elements, bool parallel)
    : hall_(std::move(hall)),
      steps_(std::move(steps)),
      max_elements_(max_elements),
      parallel_(parallel) {
  BallKey origin(hall_->size(), 0);
  index_.length.emplace(origin, 0);
  index_.layers.push_back({origin});
  frontier_.push_back(GroupElement(hall_->presentation_ptr()));
}

bool BallBuilder::grow() {
  struct Candidate {
    BallKey key;
    std::optional<GroupElement> element;
  };
  const std::size_t n = frontier_.size();
  const std::size_t s = steps_.size();
  std::vector<Candidate> candidates(n * s);
  std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic, 8) if (parallel_)
  for (std::size_t i = 0; i < n; ++i) {
    try {
      for (std::size_t t = 0; t < s; ++t) {
        GroupElement next = multiply(frontier_[i], steps_[t]);
        BallKey key = to_key(hall_->to_coordinates(next));
        candidates[i * s + t] = Candidate{std::move(key), std::move(next)};
      }
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  // Deterministic merge: first occurrence in (frontier, step) order wins,
  // then the layer is sorted.
  std::unordered_map<BallKey, std::size_t, BallKeyHash> fresh;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const BallKey& key = candidates[i].key;
    if (index_.length.count(key) || fresh.count(key)) continue;
    fresh.emplace(key, i);
  }
  if (index_.length.size() + fresh.size() > max_elements_) return false;

  std::vector<std::pair<BallKey, std::size_t>> layer(fresh.begin(), fresh.end());
  std::sort(layer.begin(), layer.end());
  const std::size_t dist = index_.layers.size();
  std::vector<BallKey> keys;
  std::vector<GroupElement> next_frontier;
  keys.reserve(layer.size());
  next_frontier.reserve(layer.size());
  for (auto& [key, source] : layer) {
    index_.length.emplace(key, dist);
    keys.push_back(key);
    next_frontier.push_back(std::move(*candidates[source].element));
  }
  index_.layers.push_back(std::move(keys));
  index_.radius = dist;
  frontier_ = std::move(next_frontier);
  return true;
}

BallIndex enumerate_ball(const HallBasisPtr& hall, const std::vector<Word>& gens,
                         std::size_t radius, const BallOptions& options) {
  if (gens.empty()) throw DomainError("ball enumeration needs generators");
  BallBuilder builder(hall, cayley_steps(gens, hall->presentation_ptr()),
                      options.max_elements, options.parallel);
  while (builder.index().radius < radius) {
    if (!builder.grow()) {
      throw CapExceeded("ball of radius " + std::to_string(radius) +
                        " exceeds " + std::to_string(options.max_elements) +
                        " elements");
    }
  }
  return builder.release();
}

BallIndex enumerate_ball_serial(const HallBasisPtr& hall,
                                const std::vector<Word>& gens, std::size_t radius,
                                std::size_t max_elements) {
  if (gens.empty()) throw DomainError("ball enumeration needs generators");
  const PresentationPtr& p = hall->presentation_ptr();
  std::vector<GroupElement> steps = cayley_steps(gens, p);

  BallIndex index;
  index.radius = radius;
  struct Node {
    GroupElement element;
    std::size_t dist;
  };
  std::deque<Node> queue;
  BallKey origin(hall->size(), 0);
  index.length.emplace(origin, 0);
  queue.push_back({GroupElement(p), 0});
  while (!queue.empty()) {
    Node node = std::move(queue.front());
    queue.pop_front();
    if (node.dist == radius) continue;
    for (const GroupElement& step : steps) {
      GroupElement next = multiply(node.element, step);
      BallKey key = to_key(hall->to_coordinates(next));
      if (index.length.count(key)) continue;
      index.length.emplace(std::move(key), node.dist + 1);
      if (index.length.size() > max_elements) {
        throw CapExceeded("ball exceeds " + std::to_string(max_elements) +
                          " elements");
      }
      queue.push_back({std::move(next), node.dist + 1});
    }
  }
  index.layers.assign(radius + 1, {});
  for (const auto& [key, dist] : index.length) index.layers[dist].push_back(key);
  for (auto& layer : index.layers) std::sort(layer.begin(), layer.end());
  return index;
}

std::vector<char> classify_members(const SubgroupStandardBasis& basis,
                                   const std::vector<BallKey>& keys,
                                   bool parallel) {
  std::vector<char> out(keys.size(), 0);
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 64) if (parallel)
  for (std::size_t i = 0; i < keys.size(); ++i) {
    try {
      out[i] = basis.member_coords(from_key(keys[i])) ? 1 : 0;
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

namespace {

struct MemberSample {
  std::size_t f_length;
  BallKey key;
};

}  // namespace

DistortionTable measure_distortion(const std::vector<Word>& gens,
                                   const HallBasisPtr& hall, std::size_t radius,
                                   const MeasureOptions& options) {
  const PresentationPtr& p = hall->presentation_ptr();
  DistortionTable table;
  table.requested_radius = radius;

  SubgroupStandardBasis h_basis = induced_basis(gens, hall, options.event_cap);

  BallBuilder ambient(hall, cayley_steps(standard_generators(*p), p),
                      options.max_elements, options.parallel);
  while (ambient.index().radius < radius) {
    if (!ambient.grow()) {
      table.complete = false;
      break;
    }
  }
  const BallIndex& ball = ambient.index();

  std::vector<MemberSample> members;
  for (std::size_t n = 1; n <= ball.radius; ++n) {
    const auto& layer = ball.layers[n];
    std::vector<char> in_h = classify_members(h_basis, layer, options.parallel);
    for (std::size_t i = 0; i < layer.size(); ++i)
      if (in_h[i]) members.push_back({n, layer[i]});
  }

  // H-length of each member, or a lower bound when unresolved.
  std::vector<BigInt> h_length(members.size());
  std::vector<char> exact(members.size(), 1);
  if (gens.size() == 1) {
    // Members are u^j; the H-length is |j|.
    Coords u = hall->to_coordinates(embed(gens.front(), p));
    auto d = depth(u);
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (!d) break;
      BigInt j = BigInt(static_cast<long>(members[i].key[*d])) / u[*d];
      h_length[i] = abs(j);
    }
  } else if (!members.empty()) {
    BallBuilder inner(hall, cayley_steps(gens, p), options.max_elements,
                      options.parallel);
    std::size_t resolved = 0;
    auto resolve = [&] {
      resolved = 0;
      for (std::size_t i = 0; i < members.size(); ++i) {
        if (const std::size_t* len = inner.index().find(members[i].key)) {
          h_length[i] = static_cast<unsigned long>(*len);
          ++resolved;
        }
      }
    };
    resolve();
    while (resolved < members.size()) {
      const std::size_t before = inner.index().size();
      if (!inner.grow() || inner.index().size() == before) break;
      resolve();
    }
    if (resolved < members.size()) {
      const BigInt bound = static_cast<unsigned long>(inner.index().radius + 1);
      for (std::size_t i = 0; i < members.size(); ++i) {
        if (!inner.index().find(members[i].key)) {
          h_length[i] = bound;
          exact[i] = 0;
        }
      }
    }
  }

  std::vector<BigInt> best(ball.radius + 1);
  std::vector<char> best_exact(ball.radius + 1, 1);
  for (std::size_t i = 0; i < members.size(); ++i) {
    std::size_t n = members[i].f_length;
    if (h_length[i] > best[n]) best[n] = h_length[i];
    if (!exact[i]) best_exact[n] = 0;
  }
  BigInt running = 0;
  bool running_exact = true;
  for (std::size_t n = 1; n <= ball.radius; ++n) {
    if (best[n] > running) running = best[n];
    running_exact = running_exact && best_exact[n];
    table.rows.push_back({n, running, running_exact});
  }
  return table;
}

double estimate_exponent(const DistortionTable& t) {
  std::vector<std::pair<double, double>> points;
  for (const auto& row : t.rows) {
    if (sgn(row.delta) <= 0) continue;
    points.emplace_back(std::log(static_cast<double>(row.n)),
                        std::log(row.delta.get_d()));
  }
  if (points.size() < 4) {
    throw DomainError("exponent fit needs at least 4 radii with positive distortion");
  }
  const std::size_t keep = (points.size() + 1) / 2;
  points.erase(points.begin(), points.end() - static_cast<std::ptrdiff_t>(keep));
  double mx = 0, my = 0;
  for (auto [x, y] : points) {
    mx += x;
    my += y;
  }
  mx /= static_cast<double>(points.size());
  my /= static_cast<double>(points.size());
  double sxy = 0, sxx = 0;
  for (auto [x, y] : points) {
    sxy += (x - mx) * (y - my);
    sxx += (x - mx) * (x - mx);
  }
  return sxy / sxx;
}

std::string to_csv(const DistortionTable& t) {
  std::ostringstream out;
  out << "n,delta,exact\n";
  for (const auto& row : t.rows) {
    out << row.n << ',' << row.delta.get_str() << ',' << (row.exact ? "true" : "false")
        << '\n';
  }
  return out.str();
}

}  // namespace nildist
