#include "nildist/subgroup.hpp"

#include <algorithm>

#include "nildist/error.hpp"

namespace nildist {

Coords GraphCoordinates::coordinates(const Element& x) const {
  Coords out = image_->to_coordinates(x.image);
  Coords tail = source_->to_coordinates(x.source);
  out.insert(out.end(), std::make_move_iterator(tail.begin()),
             std::make_move_iterator(tail.end()));
  return out;
}

bool SubgroupStandardBasis::member(const GroupElement& g) const {
  return sift(FreeNilpotentCoordinates(hall_), entries_, g);
}

bool SubgroupStandardBasis::member_coords(const Coords& v) const {
  auto d = depth(v);
  if (!d) return true;
  auto idx = entry_at(*d);
  if (!idx || !divides(entries_[*idx].coords[*d], v[*d])) return false;
  return member(hall_->from_coordinates(v));
}

std::optional<std::size_t> SubgroupStandardBasis::entry_at(std::size_t pivot) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), pivot,
      [](const Entry& e, std::size_t p) { return e.pivot < p; });
  if (it == entries_.end() || it->pivot != pivot) return std::nullopt;
  return static_cast<std::size_t>(it - entries_.begin());
}

SubgroupStandardBasis induced_basis(const std::vector<GroupElement>& gens,
                                    const HallBasisPtr& hall,
                                    std::size_t event_cap) {
  FreeNilpotentCoordinates group(hall);
  return SubgroupStandardBasis(hall, induce(group, gens, event_cap));
}

SubgroupStandardBasis induced_basis(const std::vector<Word>& gens,
                                    const HallBasisPtr& hall,
                                    std::size_t event_cap) {
  std::vector<GroupElement> elements;
  elements.reserve(gens.size());
  for (const Word& w : gens) elements.push_back(embed(w, hall->presentation_ptr()));
  return induced_basis(elements, hall, event_cap);
}

AbelianizedBasis abelianized_basis(const std::vector<Word>& gens,
                                   const Presentation& p) {
  const std::size_t m = p.rank();
  IntMatrix sums(gens.size(), m);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (const Letter& l : gens[i]) sums(i, l.generator) += l.sign;

  AbelianizedBasis ab;
  IntMatrix span(0, m);
  if (!gens.empty()) {
    HermiteResult hnf = hermite_normal_form(sums);
    ab.k = hnf.rank;
    for (std::size_t i = 0; i < ab.k; ++i) {
      SubgroupWord w;
      for (std::size_t j = 0; j < gens.size(); ++j) {
        if (sgn(hnf.U(i, j)) != 0) w.push_back({j, hnf.U(i, j)});
      }
      ab.b_words.push_back(std::move(w));
      ab.b_images.push_back(hnf.H.row(i));
      span.append_row(hnf.H.row(i));
    }
  }

  std::size_t current = ab.k;
  for (std::size_t j = 0; j < m && current < m; ++j) {
    IntMatrix trial = span;
    std::vector<BigInt> unit(m);
    unit[j] = 1;
    trial.append_row(unit);
    if (rank(trial) > current) {
      span = std::move(trial);
      ++current;
      ab.completion.push_back(j);
    }
  }
  return ab;
}

GroupElement evaluate(const SubgroupWord& w, const std::vector<Word>& gens,
                      const PresentationPtr& p) {
  GroupElement out(p);
  for (const GeneratorPower& gp : w) {
    out = multiply(out, power(embed(gens.at(gp.generator), p), gp.exponent));
  }
  return out;
}

std::string format(const SubgroupWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const GeneratorPower& gp : w) {
    if (!out.empty()) out += ' ';
    out += "g" + std::to_string(gp.generator + 1);
    if (gp.exponent != 1) out += "^" + gp.exponent.get_str();
  }
  return out;
}

Retraction build_retraction(const AbelianizedBasis& ab, const Presentation& p) {
  if (ab.k == 0) {
    throw DomainError("no retraction: the subgroup lies in the derived subgroup");
  }
  Retraction r;
  r.killed = ab.completion;
  for (std::size_t i = 0; i < p.rank(); ++i) {
    if (!std::binary_search(r.killed.begin(), r.killed.end(), i)) r.kept.push_back(i);
  }
  r.target = Presentation::make(r.kept.size(), p.nilpotency_class(),
                                std::max(p.hirsch_length(), Presentation::kDefaultHirschCap));
  return r;
}

namespace {

std::vector<std::optional<std::size_t>> kept_positions(const Retraction& r,
                                                       std::size_t m) {
  std::vector<std::optional<std::size_t>> pos(m);
  for (std::size_t i = 0; i < r.kept.size(); ++i) pos.at(r.kept[i]) = i;
  return pos;
}

}  // namespace

GroupElement apply_retraction(const Retraction& r, const Word& w) {
  std::size_t m = r.kept.size() + r.killed.size();
  auto pos = kept_positions(r, m);
  Word image;
  for (const Letter& l : w) {
    if (l.generator >= m) throw DomainError("letter out of range for retraction");
    if (pos[l.generator]) image.push_back({*pos[l.generator], l.sign});
  }
  return embed(image, r.target);
}

GroupElement apply_retraction(const Retraction& r, const GroupElement& g) {
  const Presentation& src = g.presentation();
  const Presentation& dst = *r.target;
  auto pos = kept_positions(r, src.rank());
  std::vector<BigInt> coeffs(dst.monomial_count());
  for (std::size_t i = 0; i < src.monomial_count(); ++i) {
    if (sgn(g.coefficient(i)) == 0) continue;
    Monomial letters = src.monomial_letters(i);
    bool survives = true;
    for (auto& l : letters) {
      if (!pos[l]) {
        survives = false;
        break;
      }
      l = *pos[l];
    }
    if (survives) coeffs[dst.monomial_index(letters)] = g.coefficient(i);
  }
  return from_polynomial(r.target, std::move(coeffs));
}

std::size_t cyclic_distortion_exponent(const Word& u, const PresentationPtr& p) {
  auto w = weight(embed(u, p));
  if (!w) throw DomainError("distortion exponent of the trivial element");
  return *w;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Undistorted:
      return "undistorted";
    case Verdict::Distorted:
      return "distorted";
    case Verdict::Trivial:
      return "trivial";
  }
  return "unknown";
}

namespace {

bool is_normal(const SubgroupStandardBasis& basis, const PresentationPtr& p) {
  for (const auto& entry : basis.entries()) {
    for (std::size_t g = 0; g < p->rank(); ++g) {
      GroupElement a = GroupElement::generator(p, g);
      GroupElement ai = GroupElement::generator(p, g, -1);
      if (!basis.member(multiply(multiply(ai, entry.element), a))) return false;
      if (!basis.member(multiply(multiply(a, entry.element), ai))) return false;
    }
  }
  return true;
}

KernelWitness make_witness(const GroupElement& element, const HallBasis& hall) {
  KernelWitness w{element, hall.to_coordinates(element), 0, ""};
  w.weight = weight(element).value_or(0);
  w.word = hall.normal_form(w.coords);
  return w;
}

}  // namespace

DistortionReport decide_undistorted(const std::vector<Word>& gens,
                                    const HallBasisPtr& hall,
                                    const AnalysisOptions& options) {
  const PresentationPtr& p = hall->presentation_ptr();
  DistortionReport report;
  report.hirsch_F = hall->size();

  std::vector<GroupElement> elements;
  for (const Word& w : gens) elements.push_back(embed(w, p));
  SubgroupStandardBasis h_basis = induced_basis(elements, hall, options.event_cap);
  report.hirsch_H = h_basis.hirsch_length();

  if (report.hirsch_H == 0) {
    report.verdict = Verdict::Trivial;
    report.normal = true;
    report.finite_index = false;
    return report;
  }

  AbelianizedBasis ab = abelianized_basis(gens, *p);
  report.k = ab.k;
  report.finite_index = report.hirsch_H == report.hirsch_F;
  report.normal = is_normal(h_basis, p);
  if (report.hirsch_H == 1) {
    report.cyclic_exponent = weight(h_basis.entries().front().element).value();
  }

  if (ab.k == 0) {
    // H lies in F'; every element dies under the abelianizing retraction.
    report.verdict = Verdict::Distorted;
    report.hirsch_rH = 0;
    report.hirsch_kernel = report.hirsch_H;
    report.kernel_witness = make_witness(h_basis.entries().front().element, *hall);
    return report;
  }

  Retraction r = build_retraction(ab, *p);
  HallBasisPtr d_hall = HallBasis::generate(r.target);

  std::vector<GraphCoordinates::Element> pairs;
  std::vector<GroupElement> images;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    images.push_back(apply_retraction(r, gens[i]));
    pairs.push_back({images.back(), elements[i]});
  }
  SubgroupStandardBasis rh_basis = induced_basis(images, d_hall, options.event_cap);
  report.hirsch_rH = rh_basis.hirsch_length();

  GraphCoordinates graph(d_hall, hall);
  auto graph_entries = induce(graph, pairs, options.event_cap);
  std::vector<const GroupElement*> kernel;
  for (const auto& e : graph_entries) {
    if (e.pivot >= graph.image_length()) kernel.push_back(&e.element.source);
  }
  report.hirsch_kernel = kernel.size();
  if (graph_entries.size() != report.hirsch_H ||
      graph_entries.size() - kernel.size() != report.hirsch_rH) {
    throw InternalInconsistency(
        "Hirsch lengths of H, r(H) and H ∩ ker r are not additive");
  }

  if (report.hirsch_H == report.hirsch_rH) {
    report.verdict = Verdict::Undistorted;
    RetractWitness rw;
    rw.retraction = r;
    std::vector<GroupElement> hn = elements;
    for (const Word& w : gens) rw.hn_generators.push_back(format(free_reduce(w), *p));
    for (std::size_t g : r.killed) {
      hn.push_back(GroupElement::generator(p, g));
      rw.hn_generators.push_back(p->name(g));
    }
    SubgroupStandardBasis hn_basis = induced_basis(hn, hall, options.event_cap);
    rw.hirsch_hn = hn_basis.hirsch_length();
    for (const auto& e : hn_basis.entries()) rw.hn_basis.push_back(hall->normal_form(e.coords));
    report.retract_witness = std::move(rw);
  } else {
    report.verdict = Verdict::Distorted;
    report.kernel_witness = make_witness(*kernel.front(), *hall);
  }
  return report;
}

}  // namespace nildist
