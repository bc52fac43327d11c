#include "repshift/fingroup.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace repshift {

GroupElement GroupElement::permutation(std::vector<uint8_t> images) {
    GroupElement g;
    g.images_ = std::move(images);
    std::vector<bool> seen(g.images_.size(), false);
    for (uint8_t v : g.images_) {
        if (v >= g.images_.size() || seen[v])
            throw DomainError("permutation images are not a bijection");
        seen[v] = true;
    }
    return g;
}

GroupElement GroupElement::residue(uint32_t value, uint32_t modulus) {
    if (modulus == 0 || value >= modulus)
        throw DomainError("residue out of range");
    GroupElement g;
    g.value_ = value;
    g.modulus_ = modulus;
    return g;
}

bool GroupElement::is_identity() const {
    if (!is_permutation()) return value_ == 0;
    for (size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != i) return false;
    return true;
}

GroupElement GroupElement::operator*(const GroupElement& rhs) const {
    if (is_permutation() != rhs.is_permutation())
        throw DomainError("cannot multiply permutation by residue");
    if (!is_permutation()) {
        if (modulus_ != rhs.modulus_) throw DomainError("residue modulus mismatch");
        return residue((value_ + rhs.value_) % modulus_, modulus_);
    }
    if (images_.size() != rhs.images_.size())
        throw DomainError("permutation degree mismatch");
    // (p*q)(i) = p(q(i))
    std::vector<uint8_t> out(images_.size());
    for (size_t i = 0; i < images_.size(); ++i) out[i] = images_[rhs.images_[i]];
    GroupElement g;
    g.images_ = std::move(out);
    return g;
}

GroupElement GroupElement::inverse() const {
    if (!is_permutation())
        return residue(value_ == 0 ? 0 : modulus_ - value_, modulus_);
    std::vector<uint8_t> out(images_.size());
    for (size_t i = 0; i < images_.size(); ++i) out[images_[i]] = static_cast<uint8_t>(i);
    GroupElement g;
    g.images_ = std::move(out);
    return g;
}

GroupElement GroupElement::pow(long long e) const {
    GroupElement base = e < 0 ? inverse() : *this;
    long long n = e < 0 ? -e : e;
    GroupElement acc = is_permutation()
                           ? permutation([&] {
                                 std::vector<uint8_t> id(images_.size());
                                 std::iota(id.begin(), id.end(), 0);
                                 return id;
                             }())
                           : residue(0, modulus_);
    for (; n > 0; --n) acc = acc * base;
    return acc;
}

std::string GroupElement::str() const {
    if (!is_permutation()) return std::to_string(value_);
    if (is_identity()) return "e";
    std::string out;
    std::vector<bool> done(images_.size(), false);
    for (size_t i = 0; i < images_.size(); ++i) {
        if (done[i] || images_[i] == i) continue;
        out += '(';
        size_t j = i;
        do {
            out += std::to_string(j + 1);
            done[j] = true;
            j = images_[j];
        } while (j != i);
        out += ')';
    }
    return out;
}

std::optional<GroupElement> GroupElement::parse_permutation(std::string_view s, int degree) {
    std::vector<uint8_t> img(degree);
    std::iota(img.begin(), img.end(), 0);
    if (s == "e" || s == "()") return permutation(std::move(img));
    size_t i = 0;
    bool any = false;
    while (i < s.size()) {
        if (s[i] != '(') return std::nullopt;
        ++i;
        std::vector<int> cycle;
        while (i < s.size() && s[i] != ')') {
            if (s[i] < '1' || s[i] > '9') return std::nullopt;
            int p = s[i] - '1';
            if (p >= degree) return std::nullopt;
            cycle.push_back(p);
            ++i;
        }
        if (i >= s.size() || cycle.size() < 2) return std::nullopt;
        ++i;
        for (size_t j = 0; j < cycle.size(); ++j) {
            int from = cycle[j], to = cycle[(j + 1) % cycle.size()];
            if (img[from] != from) return std::nullopt; // overlapping cycles
            img[from] = static_cast<uint8_t>(to);
        }
        any = true;
    }
    if (!any) return std::nullopt;
    // validate bijection
    std::set<uint8_t> uniq(img.begin(), img.end());
    if (uniq.size() != img.size()) return std::nullopt;
    return permutation(std::move(img));
}

std::optional<GroupElement> GroupElement::parse_residue(std::string_view s, uint32_t modulus) {
    if (s.empty()) return std::nullopt;
    uint32_t v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') return std::nullopt;
        v = v * 10 + static_cast<uint32_t>(c - '0');
        if (v >= modulus) return std::nullopt;
    }
    return residue(v, modulus);
}

// ---------------------------------------------------------------------------

namespace {

std::vector<GroupElement> all_permutations(int n, bool even_only) {
    std::vector<uint8_t> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::vector<GroupElement> out;
    do {
        if (even_only) {
            int inversions = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (img[i] > img[j]) ++inversions;
            if (inversions % 2 != 0) continue;
        }
        out.push_back(GroupElement::permutation(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

} // namespace

FiniteGroup::FiniteGroup(std::string name, std::vector<GroupElement> elements, int degree,
                         bool permutation_based)
    : name_(std::move(name)), elements_(std::move(elements)), degree_(degree),
      permutation_based_(permutation_based) {
    std::sort(elements_.begin(), elements_.end());
    for (int i = 0; i < static_cast<int>(elements_.size()); ++i)
        index_.emplace(elements_[i], i);
    int n = size();
    table_.assign(n, std::vector<int16_t>(n));
    inverse_.assign(n, 0);
    abelian_ = true;
    for (int i = 0; i < n; ++i) {
        if (elements_[i].is_identity()) identity_ = i;
        for (int j = 0; j < n; ++j) {
            auto it = index_.find(elements_[i] * elements_[j]);
            if (it == index_.end())
                throw DomainError("element set not closed under multiplication");
            table_[i][j] = static_cast<int16_t>(it->second);
            if (it->second == 0 && false) {}
        }
        auto inv_it = index_.find(elements_[i].inverse());
        if (inv_it == index_.end())
            throw DomainError("element set not closed under inverse");
        inverse_[i] = static_cast<int16_t>(inv_it->second);
    }
    for (int i = 0; i < n && abelian_; ++i)
        for (int j = i + 1; j < n; ++j)
            if (table_[i][j] != table_[j][i]) { abelian_ = false; break; }
}

FiniteGroup FiniteGroup::symmetric(int n) {
    if (n < 1 || n > 5) throw ConfigError("symmetric group rank must be in [1,5]");
    return FiniteGroup("S" + std::to_string(n), all_permutations(n, false), n, true);
}

FiniteGroup FiniteGroup::alternating(int n) {
    if (n != 4 && n != 5) throw ConfigError("alternating group rank must be 4 or 5");
    return FiniteGroup("A" + std::to_string(n), all_permutations(n, true), n, true);
}

FiniteGroup FiniteGroup::cyclic(int n) {
    if (n < 1 || n > 64) throw ConfigError("cyclic group order must be in [1,64]");
    std::vector<GroupElement> elems;
    for (int i = 0; i < n; ++i) elems.push_back(GroupElement::residue(i, n));
    return FiniteGroup("Z" + std::to_string(n), std::move(elems), n, false);
}

FiniteGroup FiniteGroup::klein_four() {
    std::vector<GroupElement> elems;
    elems.push_back(*GroupElement::parse_permutation("e", 4));
    elems.push_back(*GroupElement::parse_permutation("(12)(34)", 4));
    elems.push_back(*GroupElement::parse_permutation("(13)(24)", 4));
    elems.push_back(*GroupElement::parse_permutation("(14)(23)", 4));
    return FiniteGroup("V4", std::move(elems), 4, true);
}

FiniteGroup FiniteGroup::from_name(std::string_view name) {
    if (name == "V4") return klein_four();
    auto rank = [&]() -> int {
        std::string digits(name.substr(1));
        if (digits.empty() || digits.size() > 3 ||
            digits.find_first_not_of("0123456789") != std::string::npos)
            throw ConfigError("unknown group name: " + std::string(name));
        return std::stoi(digits);
    };
    if (!name.empty() && name[0] == 'S') return symmetric(rank());
    if (!name.empty() && name[0] == 'A') return alternating(rank());
    if (!name.empty() && name[0] == 'Z') return cyclic(rank());
    throw ConfigError("unknown group name: " + std::string(name));
}

FiniteGroup FiniteGroup::subgroup_of(const FiniteGroup& parent,
                                     const std::vector<int>& element_indices,
                                     std::string name) {
    std::vector<GroupElement> elems;
    elems.reserve(element_indices.size());
    for (int i : element_indices) elems.push_back(parent.element(i));
    return FiniteGroup(std::move(name), std::move(elems), parent.degree(),
                       parent.permutation_based());
}

int FiniteGroup::pow(int a, long long e) const {
    int base = e < 0 ? inv(a) : a;
    long long n = e < 0 ? -e : e;
    int acc = identity_;
    for (; n > 0; --n) acc = mul(acc, base);
    return acc;
}

int FiniteGroup::index_of(const GroupElement& g) const {
    auto it = index_.find(g);
    return it == index_.end() ? -1 : it->second;
}

int FiniteGroup::index_of_or_throw(const GroupElement& g) const {
    int i = index_of(g);
    if (i < 0) throw DomainError("element not in group " + name_);
    return i;
}

int FiniteGroup::parse_element(std::string_view s) const {
    std::optional<GroupElement> g =
        permutation_based_ ? GroupElement::parse_permutation(s, degree_)
                           : GroupElement::parse_residue(s, static_cast<uint32_t>(degree_));
    if (!g) return -1;
    return index_of(*g);
}

// ---------------------------------------------------------------------------

Subgroup generated_subgroup(const FiniteGroup& g, const Subgroup& generators) {
    for (int x : generators)
        if (x < 0 || x >= g.size()) throw DomainError("generator outside group");
    std::vector<bool> in(g.size(), false);
    std::vector<int> stack;
    auto add = [&](int x) {
        if (!in[x]) { in[x] = true; stack.push_back(x); }
    };
    add(g.identity());
    for (int x : generators) { add(x); add(g.inv(x)); }
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y = 0; y < g.size(); ++y)
            if (in[y]) { add(g.mul(x, y)); add(g.mul(y, x)); }
    }
    Subgroup out;
    for (int i = 0; i < g.size(); ++i)
        if (in[i]) out.push_back(i);
    return out;
}

bool is_transitive(const FiniteGroup& g, const Subgroup& h, int n) {
    std::vector<bool> orbit(n, false);
    orbit[0] = true;
    bool grew = true;
    while (grew) {
        grew = false;
        for (int p = 0; p < n; ++p) {
            if (!orbit[p]) continue;
            for (int x : h) {
                const auto& img = g.element(x).images();
                int q = p < static_cast<int>(img.size()) ? img[p] : p;
                if (q < n && !orbit[q]) { orbit[q] = true; grew = true; }
            }
        }
    }
    for (int p = 0; p < n; ++p)
        if (!orbit[p]) return false;
    return true;
}

// ---------------------------------------------------------------------------

SubgroupLattice::SubgroupLattice(const FiniteGroup& g) : group_(&g) {
    trivial_ = intern({g.identity()});
}

int SubgroupLattice::full() {
    Subgroup all(group_->size());
    std::iota(all.begin(), all.end(), 0);
    return intern(all);
}

int SubgroupLattice::intern(const Subgroup& closed_subgroup) {
    auto it = ids_.find(closed_subgroup);
    if (it != ids_.end()) return it->second;
    int id = static_cast<int>(subgroups_.size());
    subgroups_.push_back(closed_subgroup);
    ids_.emplace(closed_subgroup, id);
    return id;
}

int SubgroupLattice::intern_generated(const Subgroup& generators) {
    return intern(generated_subgroup(*group_, generators));
}

int SubgroupLattice::extend(int id, int element) {
    auto key = std::make_pair(id, element);
    auto it = extend_memo_.find(key);
    if (it != extend_memo_.end()) return it->second;
    const Subgroup& base = subgroups_[id];
    int out;
    if (std::binary_search(base.begin(), base.end(), element)) {
        out = id;
    } else {
        Subgroup gens = base;
        gens.push_back(element);
        out = intern_generated(gens);
    }
    extend_memo_.emplace(key, out);
    return out;
}

int SubgroupLattice::join(int a, int b) {
    if (a == b) return a;
    if (a > b) std::swap(a, b);
    auto key = std::make_pair(a, b);
    auto it = join_memo_.find(key);
    if (it != join_memo_.end()) return it->second;
    int out = a;
    for (int x : subgroups_[b]) out = extend(out, x);
    join_memo_.emplace(key, out);
    return out;
}

// ---------------------------------------------------------------------------

bool ExtensionData::in_kernel(int e_idx) const {
    return std::binary_search(kernel.begin(), kernel.end(), e_idx);
}

int ExtensionData::kernel_pos(int e_idx) const {
    auto it = std::lower_bound(kernel.begin(), kernel.end(), e_idx);
    if (it == kernel.end() || *it != e_idx) return -1;
    return static_cast<int>(it - kernel.begin());
}

int ExtensionData::twisted_action(int y_sigma_idx, int a_e_idx) const {
    int pos = kernel_pos(a_e_idx);
    if (pos < 0) throw DomainError("element outside the kernel A");
    return kernel[action[y_sigma_idx][pos]];
}

ExtensionData standard_extension(std::string_view name) {
    FiniteGroup e = [&] {
        if (name == "S3/S2") return FiniteGroup::symmetric(3);
        if (name == "A4/Z3") return FiniteGroup::alternating(4);
        if (name == "S4/S3") return FiniteGroup::symmetric(4);
        throw ConfigError("unknown extension name: " + std::string(name));
    }();

    FiniteGroup sigma = [&] {
        if (name == "S3/S2") return FiniteGroup::symmetric(2);
        if (name == "A4/Z3") return FiniteGroup::cyclic(3);
        return FiniteGroup::symmetric(3);
    }();
    ExtensionData ext{std::string(name), e, std::move(sigma), {}, {}, {}, {}};
    if (name == "S3/S2") {
        ext.kernel = generated_subgroup(e, {e.parse_element("(123)")});
        // projection = sign map, section sends (12) to (12)
        ext.projection.assign(e.size(), 0);
        int sign_id = ext.sigma.parse_element("e");
        int sign_sw = ext.sigma.parse_element("(12)");
        for (int i = 0; i < e.size(); ++i) {
            const auto& img = e.element(i).images();
            int inversions = 0;
            for (size_t a = 0; a < img.size(); ++a)
                for (size_t b = a + 1; b < img.size(); ++b)
                    if (img[a] > img[b]) ++inversions;
            ext.projection[i] = inversions % 2 == 0 ? sign_id : sign_sw;
        }
        ext.section.assign(ext.sigma.size(), 0);
        ext.section[sign_id] = e.identity();
        ext.section[sign_sw] = e.parse_element("(12)");
    } else if (name == "A4/Z3") {
        ext.kernel = generated_subgroup(
            e, {e.parse_element("(12)(34)"), e.parse_element("(13)(24)")});
        ext.section.assign(3, 0);
        ext.section[0] = e.identity();
        ext.section[1] = e.parse_element("(123)");
        ext.section[2] = e.parse_element("(132)");
        ext.projection.assign(e.size(), -1);
        for (int i = 0; i < e.size(); ++i) {
            for (int y = 0; y < 3; ++y) {
                if (std::binary_search(ext.kernel.begin(), ext.kernel.end(),
                                       e.mul(e.inv(ext.section[y]), i))) {
                    ext.projection[i] = y;
                    break;
                }
            }
            if (ext.projection[i] < 0) throw InternalError("A4/Z3 projection gap");
        }
    } else { // S4/S3
        ext.kernel = generated_subgroup(
            e, {e.parse_element("(12)(34)"), e.parse_element("(13)(24)")});
        ext.section.assign(ext.sigma.size(), 0);
        for (int y = 0; y < ext.sigma.size(); ++y) {
            std::vector<uint8_t> img(4);
            const auto& yimg = ext.sigma.element(y).images();
            for (int p = 0; p < 3; ++p) img[p] = yimg[p];
            img[3] = 3;
            ext.section[y] = e.index_of_or_throw(GroupElement::permutation(img));
        }
        ext.projection.assign(e.size(), -1);
        for (int i = 0; i < e.size(); ++i) {
            for (int y = 0; y < ext.sigma.size(); ++y) {
                if (std::binary_search(ext.kernel.begin(), ext.kernel.end(),
                                       e.mul(e.inv(ext.section[y]), i))) {
                    ext.projection[i] = y;
                    break;
                }
            }
            if (ext.projection[i] < 0) throw InternalError("S4/S3 projection gap");
        }
    }
    // a^y = s(y) a s(y)^-1
    ext.action.assign(ext.sigma.size(), std::vector<int>(ext.kernel.size()));
    for (int y = 0; y < ext.sigma.size(); ++y) {
        int sy = ext.section[y];
        for (size_t p = 0; p < ext.kernel.size(); ++p) {
            int conj = ext.e.mul(ext.e.mul(sy, ext.kernel[p]), ext.e.inv(sy));
            int pos = ext.kernel_pos(conj);
            if (pos < 0) throw InternalError("twisted action leaves kernel");
            ext.action[y][p] = pos;
        }
    }
    return ext;
}

} // namespace repshift
