#include <unicx/scomplex.hpp>

#include <unicx/errors.hpp>

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace unicx {

Simplex::Simplex(std::vector<VertexId> vertices) : v_(std::move(vertices)) {
  for (std::size_t i = 1; i < v_.size(); ++i)
    if (v_[i - 1] >= v_[i]) throw InputError("simplex vertices must be strictly increasing");
}

Simplex Simplex::from_unsorted(std::vector<VertexId> vertices) {
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw InputError("simplex has a repeated vertex");
  return Simplex(std::move(vertices));
}

bool Simplex::contains(VertexId v) const noexcept { return std::binary_search(v_.begin(), v_.end(), v); }

bool Simplex::is_face_of(const Simplex& other) const noexcept {
  return std::includes(other.v_.begin(), other.v_.end(), v_.begin(), v_.end());
}

Simplex Simplex::without(VertexId v) const {
  Simplex out;
  out.v_.reserve(v_.size());
  for (auto x : v_)
    if (x != v) out.v_.push_back(x);
  return out;
}

Simplex Simplex::with(VertexId v) const {
  Simplex out = *this;
  auto it = std::lower_bound(out.v_.begin(), out.v_.end(), v);
  if (it == out.v_.end() || *it != v) out.v_.insert(it, v);
  return out;
}

Simplex Simplex::intersection(const Simplex& other) const {
  Simplex out;
  std::set_intersection(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(), std::back_inserter(out.v_));
  return out;
}

namespace {

template <typename Coord>
std::string join_coords(const std::vector<Coord>& c) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << ')';
  return os.str();
}

}  // namespace

std::string label_to_string(const Label& label) {
  struct Visitor {
    std::string operator()(const std::string& s) const { return s; }
    std::string operator()(const FpVector& v) const { return join_coords(v.coords()); }
    std::string operator()(const FpLine& l) const { return "L" + join_coords(l.generator().coords()); }
    std::string operator()(const ZVector& v) const { return join_coords(v.coords()); }
    std::string operator()(const ZLine& l) const { return "L" + join_coords(l.generator().coords()); }
  };
  return std::visit(Visitor{}, label);
}

FVector::FVector(std::vector<BigInt> entries) : entries_(std::move(entries)) {
  if (entries_.empty() || entries_.front() != 1) throw InputError("f-vectors start with f_{-1} = 1");
}

BigInt FVector::operator()(int i) const {
  if (i < -1) throw InputError("f-vector index below -1");
  const auto pos = static_cast<std::size_t>(i + 1);
  return pos < entries_.size() ? entries_[pos] : BigInt(0);
}

BigInt FVector::euler_characteristic() const {
  BigInt chi = 0;
  for (std::size_t i = 1; i < entries_.size(); ++i) {
    if ((i - 1) % 2 == 0)
      chi += entries_[i];
    else
      chi -= entries_[i];
  }
  return chi;
}

std::ostream& operator<<(std::ostream& os, const FVector& f) {
  os << '(';
  for (std::size_t i = 0; i < f.entries().size(); ++i) os << (i ? "," : "") << f.entries()[i];
  return os << ')';
}

std::size_t SimplicialComplex::count(int d) const noexcept {
  if (d == -1) return 1;
  if (d < 0 || d > dimension()) return 0;
  return by_dim_[static_cast<std::size_t>(d)].size();
}

std::size_t SimplicialComplex::total_simplices() const noexcept {
  std::size_t n = 0;
  for (const auto& layer : by_dim_) n += layer.size();
  return n;
}

std::span<const Simplex> SimplicialComplex::simplices(int d) const {
  if (d < 0 || d > dimension()) return {};
  return by_dim_[static_cast<std::size_t>(d)];
}

bool SimplicialComplex::contains(const Simplex& s) const {
  if (s.empty()) return true;
  return index_of(s).has_value();
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
  const int d = s.dimension();
  if (d < 0 || d > dimension()) return std::nullopt;
  const auto& idx = index_[static_cast<std::size_t>(d)];
  auto it = idx.find(s);
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

std::optional<VertexId> SimplicialComplex::find_vertex(const Label& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<VertexId>(i);
  return std::nullopt;
}

std::vector<Simplex> SimplicialComplex::facets() const {
  std::vector<Simplex> out;
  for (int d = dimension(); d >= 0; --d)
    for (const auto& s : simplices(d)) {
      bool maximal = true;
      if (d < dimension()) {
        for (VertexId v = 0; v < vertex_count() && maximal; ++v)
          if (!s.contains(v) && contains(s.with(v))) maximal = false;
      }
      if (maximal) out.push_back(s);
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool SimplicialComplex::is_pure() const {
  for (const auto& f : facets())
    if (f.dimension() != dimension()) return false;
  return true;
}

SimplicialComplex from_simplices(std::span<const Simplex> simplices, std::vector<Label> labels) {
  SimplicialComplex k;
  std::vector<std::unordered_set<Simplex, SimplexHash>> layers;
  auto layer = [&](int d) -> std::unordered_set<Simplex, SimplexHash>& {
    if (layers.size() <= static_cast<std::size_t>(d)) layers.resize(static_cast<std::size_t>(d) + 1);
    return layers[static_cast<std::size_t>(d)];
  };
  std::vector<Simplex> stack;
  for (const auto& s : simplices) {
    for (auto v : s)
      if (v >= labels.size()) throw InputError("simplex uses vertex " + std::to_string(v) + " without a label");
    if (s.empty()) continue;
    stack.push_back(s);
    while (!stack.empty()) {
      Simplex cur = std::move(stack.back());
      stack.pop_back();
      if (!layer(cur.dimension()).insert(cur).second) continue;
      if (cur.size() > 1)
        for (auto v : cur) stack.push_back(cur.without(v));
    }
  }
  for (std::size_t v = 0; v < labels.size(); ++v) layer(0).insert(Simplex{static_cast<VertexId>(v)});
  while (!layers.empty() && layers.back().empty()) layers.pop_back();

  k.labels_ = std::move(labels);
  k.by_dim_.resize(layers.size());
  k.index_.resize(layers.size());
  for (std::size_t d = 0; d < layers.size(); ++d) {
    auto& out = k.by_dim_[d];
    out.assign(layers[d].begin(), layers[d].end());
    std::sort(out.begin(), out.end());
    k.index_[d].reserve(out.size());
    for (std::size_t i = 0; i < out.size(); ++i) k.index_[d].emplace(out[i], i);
  }
  return k;
}

SimplicialComplex from_simplices(std::span<const Simplex> simplices) {
  VertexId m = 0;
  for (const auto& s : simplices)
    for (auto v : s) m = std::max(m, v + 1);
  std::vector<Label> labels;
  for (VertexId v = 0; v < m; ++v) labels.emplace_back(std::to_string(v));
  return from_simplices(simplices, std::move(labels));
}

FVector f_vector(const SimplicialComplex& k) {
  std::vector<BigInt> e{BigInt(1)};
  for (int d = 0; d <= k.dimension(); ++d) e.emplace_back(k.count(d));
  return FVector(std::move(e));
}

namespace {

SimplicialComplex renumbered(const SimplicialComplex& k, std::vector<Simplex> simplices, std::vector<VertexId> keep) {
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::unordered_map<VertexId, VertexId> to_new;
  std::vector<Label> labels;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    to_new.emplace(keep[i], static_cast<VertexId>(i));
    labels.push_back(k.label(keep[i]));
  }
  for (auto& s : simplices) {
    std::vector<VertexId> v;
    for (auto x : s) v.push_back(to_new.at(x));
    s = Simplex(std::move(v));  // renumbering is monotone, order is kept
  }
  return from_simplices(simplices, std::move(labels));
}

}  // namespace

SimplicialComplex link(const SimplicialComplex& k, const Simplex& sigma) {
  if (!k.contains(sigma)) throw InputError("link of a simplex that is not in the complex");
  if (sigma.empty()) return k;
  std::vector<Simplex> out;
  std::vector<VertexId> verts;
  for (int d = sigma.dimension() + 1; d <= k.dimension(); ++d)
    for (const auto& rho : k.simplices(d)) {
      if (!sigma.is_face_of(rho)) continue;
      Simplex tau;
      std::vector<VertexId> rest;
      std::set_difference(rho.begin(), rho.end(), sigma.begin(), sigma.end(), std::back_inserter(rest));
      verts.insert(verts.end(), rest.begin(), rest.end());
      out.emplace_back(std::move(rest));
    }
  return renumbered(k, std::move(out), std::move(verts));
}

SimplicialComplex full_subcomplex(const SimplicialComplex& k, std::span<const VertexId> vertices) {
  std::vector<VertexId> keep(vertices.begin(), vertices.end());
  for (auto v : keep)
    if (v >= k.vertex_count()) throw InputError("full subcomplex on unknown vertex " + std::to_string(v));
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<Simplex> out;
  for (int d = 0; d <= k.dimension(); ++d)
    for (const auto& s : k.simplices(d))
      if (std::includes(keep.begin(), keep.end(), s.begin(), s.end())) out.push_back(s);
  return renumbered(k, std::move(out), std::move(keep));
}

SimplicialComplex skeleton(const SimplicialComplex& k, int r) {
  if (r < -1 || r > k.dimension()) throw InputError("skeleton dimension out of range");
  if (r == -1) return SimplicialComplex{};
  std::vector<Simplex> out;
  for (int d = 0; d <= r; ++d)
    for (const auto& s : k.simplices(d)) out.push_back(s);
  return from_simplices(out, k.labels());
}

SimplexIndexer::SimplexIndexer(const SimplicialComplex& k) : k_(&k) {
  offsets_.push_back(0);
  for (int d = 0; d <= k.dimension(); ++d) offsets_.push_back(offsets_.back() + k.count(d));
}

std::size_t SimplexIndexer::global(const Simplex& s) const {
  auto idx = k_->index_of(s);
  if (!idx) throw InputError("simplex not in complex");
  return offsets_[static_cast<std::size_t>(s.dimension())] + *idx;
}

const Simplex& SimplexIndexer::simplex(std::size_t g) const {
  const int d = dimension_of(g);
  return k_->simplices(d)[g - offsets_[static_cast<std::size_t>(d)]];
}

int SimplexIndexer::dimension_of(std::size_t g) const {
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), g);
  return static_cast<int>(it - offsets_.begin()) - 1;
}

FacetList read_facet_list(std::istream& in) {
  std::unordered_map<std::string, VertexId> ids;
  std::vector<Label> labels;
  std::vector<Simplex> facets;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    std::vector<VertexId> verts;
    bool comment = false;
    while (ls >> tok) {
      if (verts.empty() && tok.front() == '#') {
        comment = true;
        break;
      }
      auto [it, fresh] = ids.emplace(tok, static_cast<VertexId>(labels.size()));
      if (fresh) labels.emplace_back(tok);
      verts.push_back(it->second);
    }
    if (comment || verts.empty()) continue;
    try {
      facets.push_back(Simplex::from_unsorted(std::move(verts)));
    } catch (const InputError& e) {
      throw InputError("facet list line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  FacetList out{from_simplices(facets, std::move(labels)), facets};
  return out;
}

FacetList parse_facet_list(const std::string& text) {
  std::istringstream in(text);
  return read_facet_list(in);
}

void write_facet_list(std::ostream& out, const SimplicialComplex& k, std::span<const Simplex> facets) {
  for (const auto& f : facets) {
    for (std::size_t i = 0; i < f.size(); ++i) out << (i ? " " : "") << label_to_string(k.label(f[i]));
    out << '\n';
  }
}

void write_facet_list(std::ostream& out, const SimplicialComplex& k) {
  const auto f = k.facets();
  write_facet_list(out, k, f);
}

}  // namespace unicx
