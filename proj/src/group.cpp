#include "mckay/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace mckay {

namespace {

long lcm_long(long a, long b) { return std::lcm(a, b); }

}  // namespace

GroupPtr FiniteMatrixGroup::closure(const std::vector<Mat2>& generators, std::size_t cap) {
    if (generators.empty()) throw std::invalid_argument("closure needs at least one generator");
    long m0 = 1;
    for (const Mat2& g : generators) m0 = lcm_long(m0, g.order());

    std::vector<Mat2> gens;
    gens.reserve(generators.size());
    for (const Mat2& g : generators) {
        Mat2 e = g.embed(m0);
        if (!(e.det() == Cyclotomic::one(m0)))
            throw std::domain_error("generator is not unimodular");
        gens.push_back(std::move(e));
    }

    auto group = std::shared_ptr<FiniteMatrixGroup>(new FiniteMatrixGroup());
    FiniteMatrixGroup& g = *group;

    g.elements_.push_back(Mat2::identity(m0));
    g.index_[g.elements_[0].key()] = 0;
    for (std::size_t head = 0; head < g.elements_.size(); ++head) {
        for (const Mat2& gen : gens) {
            Mat2 prod = g.elements_[head] * gen;
            std::string key = prod.key();
            if (g.index_.count(key)) continue;
            if (g.elements_.size() >= cap)
                throw std::runtime_error("group closure exceeded the element cap");
            g.index_.emplace(std::move(key), static_cast<int>(g.elements_.size()));
            g.elements_.push_back(std::move(prod));
        }
    }

    for (const Mat2& gen : gens)
        g.generator_indices_.push_back(g.index_.at(gen.key()));

    g.compute_orders_and_exponent();

    long field_order = lcm_long(g.exponent_, m0);
    if (field_order != m0) {
        for (Mat2& e : g.elements_) e = e.embed(field_order);
        g.index_elements();
    }
    g.field_order_ = field_order;

    g.compute_classes();
    return group;
}

GroupPtr FiniteMatrixGroup::from_closed_elements(std::vector<Mat2> elements) {
    if (elements.empty()) throw std::invalid_argument("empty element set");
    auto group = std::shared_ptr<FiniteMatrixGroup>(new FiniteMatrixGroup());
    FiniteMatrixGroup& g = *group;
    g.elements_ = std::move(elements);
    g.index_elements();
    long m = g.elements_[0].order();
    if (g.find(Mat2::identity(m)) != 0)
        throw std::invalid_argument("element 0 must be the identity");
    for (int i = 1; i < static_cast<int>(g.elements_.size()); ++i)
        g.generator_indices_.push_back(i);
    g.compute_orders_and_exponent();
    g.field_order_ = lcm_long(m, g.exponent_);
    if (g.field_order_ != m) {
        for (Mat2& e : g.elements_) e = e.embed(g.field_order_);
        g.index_elements();
    }
    g.compute_classes();
    return group;
}

void FiniteMatrixGroup::index_elements() {
    index_.clear();
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        auto [it, fresh] = index_.emplace(elements_[i].key(), static_cast<int>(i));
        if (!fresh) throw std::logic_error("duplicate element in group");
    }
}

void FiniteMatrixGroup::compute_orders_and_exponent() {
    const std::size_t n = elements_.size();
    long m = elements_[0].order();
    Mat2 id = Mat2::identity(m);
    element_order_.assign(n, 0);
    inverse_.assign(n, -1);
    exponent_ = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Mat2 acc = elements_[i];
        long ord = 1;
        while (!(acc == id)) {
            acc = acc * elements_[i];
            ++ord;
            if (ord > static_cast<long>(n))
                throw std::logic_error("element order exceeds group order; set not closed");
        }
        element_order_[i] = ord;
        exponent_ = lcm_long(exponent_, ord);
        int inv = find(elements_[i].inverse_unimodular());
        if (inv < 0) throw std::logic_error("inverse escaped the element set");
        inverse_[i] = inv;
    }
}

int FiniteMatrixGroup::product(int i, int j) const {
    int k = find(elements_[i] * elements_[j]);
    if (k < 0) throw std::logic_error("product escaped the element set");
    return k;
}

int FiniteMatrixGroup::power(int i, long e) const {
    long ord = element_order_[i];
    e %= ord;
    if (e < 0) e += ord;
    int acc = 0;
    for (long t = 0; t < e; ++t) acc = product(acc, i);
    return acc;
}

int FiniteMatrixGroup::find(const Mat2& m) const {
    auto it = index_.find(m.key());
    return it == index_.end() ? -1 : it->second;
}

void FiniteMatrixGroup::compute_classes() {
    const int n = static_cast<int>(elements_.size());
    classes_ = ClassData{};
    std::vector<int> cls(n, -1);

    // Orbits of the conjugation action; conjugating by generators suffices.
    std::vector<std::vector<int>> raw;
    for (int start = 0; start < n; ++start) {
        if (cls[start] >= 0) continue;
        int id = static_cast<int>(raw.size());
        std::vector<int> orbit{start};
        cls[start] = id;
        for (std::size_t head = 0; head < orbit.size(); ++head) {
            for (int gi : generator_indices_) {
                int conj = product(product(gi, orbit[head]), inverse_[gi]);
                if (cls[conj] < 0) {
                    cls[conj] = id;
                    orbit.push_back(conj);
                }
            }
        }
        raw.push_back(std::move(orbit));
    }

    // Deterministic ordering: size, representative order, representative key,
    // with the representative the lexicographically smallest member.
    struct Entry {
        std::vector<int> members;
        int rep;
        std::string rep_key;
        long rep_ord;
    };
    std::vector<Entry> entries;
    for (std::vector<int>& orbit : raw) {
        std::sort(orbit.begin(), orbit.end());
        Entry e;
        e.rep = orbit[0];
        e.rep_key = elements_[orbit[0]].key();
        for (int i : orbit) {
            const std::string k = elements_[i].key();
            if (k < e.rep_key) {
                e.rep_key = k;
                e.rep = i;
            }
        }
        e.rep_ord = element_order_[e.rep];
        e.members = std::move(orbit);
        entries.push_back(std::move(e));
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
        if (a.rep_ord != b.rep_ord) return a.rep_ord < b.rep_ord;
        return a.rep_key < b.rep_key;
    });

    const int k = static_cast<int>(entries.size());
    classes_.members.resize(k);
    classes_.representative.resize(k);
    classes_.size.resize(k);
    classes_.rep_order.resize(k);
    classes_.class_of.assign(n, -1);
    for (int c = 0; c < k; ++c) {
        classes_.members[c] = entries[c].members;
        classes_.representative[c] = entries[c].rep;
        classes_.size[c] = static_cast<long>(entries[c].members.size());
        classes_.rep_order[c] = entries[c].rep_ord;
        for (int i : entries[c].members) classes_.class_of[i] = c;
    }
    classes_.inverse_class.resize(k);
    classes_.power_class.resize(k);
    for (int c = 0; c < k; ++c) {
        int rep = classes_.representative[c];
        classes_.inverse_class[c] = classes_.class_of[inverse_[rep]];
        long ord = classes_.rep_order[c];
        classes_.power_class[c].resize(ord);
        int acc = 0;
        for (long j = 0; j < ord; ++j) {
            classes_.power_class[c][j] = classes_.class_of[acc];
            acc = product(acc, rep);
        }
    }
}

long structure_constant(const FiniteMatrixGroup& g, int i, int j, int k) {
    return structure_constant_at(g, i, j, g.classes().representative[k]);
}

long structure_constant_at(const FiniteMatrixGroup& g, int i, int j, int z_element) {
    const ClassData& cls = g.classes();
    long count = 0;
    for (int x : cls.members[i]) {
        int y = g.product(g.inverse(x), z_element);
        if (cls.class_of[y] == j) ++count;
    }
    return count;
}

std::vector<std::vector<std::vector<long>>> structure_constant_tensor(
    const FiniteMatrixGroup& g) {
    const ClassData& cls = g.classes();
    const int k = static_cast<int>(cls.count());
    const int n = static_cast<int>(g.order());
    std::vector<std::vector<std::vector<long>>> a(
        k, std::vector<std::vector<long>>(k, std::vector<long>(k, 0)));
    for (int m = 0; m < k; ++m) {
        int z = cls.representative[m];
        for (int x = 0; x < n; ++x) {
            int y = g.product(g.inverse(x), z);
            a[cls.class_of[x]][cls.class_of[y]][m] += 1;
        }
    }
    return a;
}

bool is_subgroup(const FiniteMatrixGroup& g, const std::vector<int>& h_indices) {
    if (h_indices.empty()) return false;
    std::set<int> h(h_indices.begin(), h_indices.end());
    if (!h.count(g.identity())) return false;
    for (int x : h) {
        if (!h.count(g.inverse(x))) return false;
        for (int y : h)
            if (!h.count(g.product(x, y))) return false;
    }
    return true;
}

bool is_normal_subgroup(const FiniteMatrixGroup& g, const std::vector<int>& h_indices) {
    if (!is_subgroup(g, h_indices))
        throw std::invalid_argument("h_indices is not a subgroup");
    std::set<int> h(h_indices.begin(), h_indices.end());
    for (int gi : g.generator_indices())
        for (int x : h)
            if (!h.count(g.product(g.product(gi, x), g.inverse(gi)))) return false;
    return true;
}

std::vector<std::vector<int>> normal_subgroups(const FiniteMatrixGroup& g) {
    if (g.order() > 1000)
        throw std::domain_error("normal_subgroups supports |G| <= 1000");
    const ClassData& cls = g.classes();
    const int k = static_cast<int>(cls.count());
    const auto tensor = structure_constant_tensor(g);

    // Close a set of classes under class products: C_i * C_j meets C_m iff
    // a_{ijm} > 0.  A class union containing the identity and closed this way
    // is a (normal) subgroup.
    auto close = [&](std::set<int> s) {
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<int> cur(s.begin(), s.end());
            for (int i : cur)
                for (int j : cur)
                    for (int m = 0; m < k; ++m)
                        if (tensor[i][j][m] > 0 && !s.count(m)) {
                            s.insert(m);
                            grew = true;
                        }
        }
        return s;
    };

    // Lattice walk: grow every found subgroup by one extra class at a time.
    std::set<std::set<int>> found;
    std::vector<std::set<int>> queue{close({cls.class_of[g.identity()]})};
    found.insert(queue[0]);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        std::set<int> base = queue[head];
        for (int c = 0; c < k; ++c) {
            if (base.count(c)) continue;
            std::set<int> bigger = base;
            bigger.insert(c);
            bigger = close(std::move(bigger));
            if (found.insert(bigger).second) queue.push_back(std::move(bigger));
        }
    }

    std::vector<std::vector<int>> result;
    for (const std::set<int>& s : found) {
        std::vector<int> subgroup;
        for (int c : s)
            subgroup.insert(subgroup.end(), cls.members[c].begin(), cls.members[c].end());
        std::sort(subgroup.begin(), subgroup.end());
        result.push_back(std::move(subgroup));
    }
    std::sort(result.begin(), result.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
              });
    return result;
}

NormalPair::NormalPair(GroupPtr g, std::vector<int> h_indices) : g_(std::move(g)) {
    std::sort(h_indices.begin(), h_indices.end());
    h_indices.erase(std::unique(h_indices.begin(), h_indices.end()), h_indices.end());
    if (!is_normal_subgroup(*g_, h_indices))
        throw std::invalid_argument("subgroup is not normal in G");
    h_indices_ = std::move(h_indices);

    std::vector<Mat2> h_elems;
    h_elems.reserve(h_indices_.size());
    for (int i : h_indices_) h_elems.push_back(g_->element(i));
    h_ = FiniteMatrixGroup::from_closed_elements(std::move(h_elems));

    h_to_g_ = h_indices_;
    g_to_h_.assign(g_->order(), -1);
    for (std::size_t i = 0; i < h_indices_.size(); ++i)
        g_to_h_[h_indices_[i]] = static_cast<int>(i);

    // Left cosets in ascending element order; the first unassigned element is
    // the smallest member of its coset.
    const int n = static_cast<int>(g_->order());
    std::vector<int> coset_of(n, -1);
    for (int i = 0; i < n; ++i) {
        if (coset_of[i] >= 0) continue;
        int c = static_cast<int>(coset_reps_.size());
        coset_reps_.push_back(i);
        for (int h : h_indices_) coset_of[g_->product(i, h)] = c;
    }
    if (coset_reps_.size() * h_indices_.size() != g_->order())
        throw std::logic_error("coset decomposition failed");

    const int q = static_cast<int>(coset_reps_.size());
    quotient_mult_.assign(q, std::vector<int>(q, -1));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            quotient_mult_[i][j] = coset_of[g_->product(coset_reps_[i], coset_reps_[j])];
}

}  // namespace mckay
