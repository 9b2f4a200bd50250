#include "qedtrees/checks.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <functional>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <thread>

#include "qedtrees/format.hpp"

namespace qedtrees {

namespace {

constexpr auto kPhoton = AlgebraTag::Photon;
constexpr auto kElectron = AlgebraTag::Electron;
constexpr auto kCharge = AlgebraTag::Charge;
constexpr auto kChargeNC = AlgebraTag::ChargeNC;

Word letter(Tree t) { return t.is_root() ? Word{} : Word{t}; }

void words_of_order(AlgebraTag tag, std::uint32_t n, Word& prefix, std::vector<Word>& out)
{
    if (n == 0) {
        out.push_back(prefix);
        return;
    }
    for (std::uint32_t k = 1; k <= n; ++k)
        for (Tree t : enumerate(k)) {
            prefix.push_back(t);
            words_of_order(tag, n - k, prefix, out);
            prefix.pop_back();
        }
}

} // namespace

// ------------------------------------------------------------ bases

std::vector<Tree> trees_up_to(std::uint32_t max_order)
{
    std::vector<Tree> out;
    for (std::uint32_t n = 0; n <= max_order; ++n) {
        const auto& level = enumerate(n);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

std::vector<Word> words_up_to(AlgebraTag tag, std::uint32_t max_order)
{
    std::vector<Word> out;
    if (tag == kPhoton || tag == kElectron) {
        Word prefix;
        for (std::uint32_t n = 0; n <= max_order; ++n)
            words_of_order(tag, n, prefix, out);
        return out;
    }
    // Generator words of degree n correspond to trees of order n.
    std::set<Word> seen;
    for (Tree t : trees_up_to(max_order)) {
        Word w = normalize_word(tag, decompose_over(t));
        if (seen.insert(w).second)
            out.push_back(std::move(w));
    }
    return out;
}

std::vector<Element> basis_up_to(AlgebraTag tag, std::uint32_t max_order)
{
    std::vector<Element> out;
    for (auto& w : words_up_to(tag, max_order))
        out.push_back(Element::basis(tag, std::move(w)));
    return out;
}

std::vector<Tensor> semidirect_basis(AlgebraTag p_tag, std::uint32_t max_order)
{
    std::vector<Tensor> out;
    const auto charge_words = words_up_to(kCharge, max_order);
    const auto p_words = words_up_to(p_tag, max_order);
    for (const auto& a : charge_words)
        for (const auto& b : p_words)
            if (total_order(kCharge, a) + total_order(p_tag, b) <= max_order)
                out.push_back(Tensor::basis({kCharge, p_tag}, {a, b}));
    return out;
}

// ------------------------------------------------------------ structures

namespace {

Tensor multiplicative(const Element& x, const std::vector<AlgebraTag>& tags, const std::function<Tensor(Tree)>& on_tree)
{
    Tensor out(tags);
    for (const auto& [word, c] : x.terms()) {
        Tensor image = Tensor::basis(tags, Tensor::Key(tags.size()));
        for (Tree t : word)
            image = image * on_tree(t);
        image *= c;
        out += image;
    }
    return out;
}

// Removes the second term in display order.
Tensor drop_one_term(const Tensor& t)
{
    const auto terms = display_terms(t);
    if (terms.size() < 2)
        throw std::logic_error("corruption target has fewer than two terms");
    Tensor out = t;
    out.add_term(terms[1].first, -terms[1].second);
    return out;
}

Element drop_one_term(const Element& x)
{
    const auto terms = display_terms(x);
    if (terms.size() < 2)
        throw std::logic_error("corruption target has fewer than two terms");
    Element out = x;
    out.add_term(terms[1].first, -terms[1].second);
    return out;
}

// Replaces the value of a linear map on one basis word.
ElementMap override_on_word(ElementMap base, Word target, Element replacement)
{
    return [base = std::move(base), target = std::move(target), replacement = std::move(replacement)](const Element& x) {
        Element out(replacement.tag());
        for (const auto& [word, c] : x.terms()) {
            Element image = word == target ? replacement : base(Element::basis(x.tag(), word));
            image *= c;
            out += image;
        }
        return out;
    };
}

LinearMap override_on_word(LinearMap base, Word target, Tensor replacement)
{
    return [base = std::move(base), target = std::move(target), replacement = std::move(replacement)](const Element& x) {
        Tensor out(replacement.tags());
        for (const auto& [word, c] : x.terms()) {
            Tensor image = word == target ? replacement : base(Element::basis(x.tag(), word));
            image *= c;
            out += image;
        }
        return out;
    };
}

// Multiplicative map whose value on one tree is replaced.
LinearMap override_on_tree(AlgebraTag tag, std::vector<AlgebraTag> out_tags, LinearMap base, Tree target,
                           Tensor replacement)
{
    return [=](const Element& x) {
        return multiplicative(x, out_tags, [&](Tree t) {
            return t == target ? replacement : base(Element::basis(tag, letter(t)));
        });
    };
}

Tree deuxun() { return parse_tree("((e v e) v e)"); }
Tree deuxdeux() { return parse_tree("(e v (e v e))"); }

} // namespace

void Structures::wire()
{
    const ChargeHopf* ch = charge_.get();
    delta_p_e = qedtrees::delta_p_e;
    delta_p_gamma = qedtrees::delta_p_gamma;
    antipode_p_e = qedtrees::antipode_p_e;
    antipode_p_gamma = qedtrees::antipode_p_gamma;
    delta_alpha = [ch](const Element& x) { return ch->coproduct(x); };
    delta_alpha_nc = [ch](const Element& x) { return ch->coproduct_nc(x); };
    antipode_alpha = [ch](const Element& x) { return ch->antipode(x); };
    antipode_alpha_nc = [ch](const Element& x) { return ch->antipode_nc(x); };
    delta_small = [ch](const Element& x) { return ch->coaction(x); };
    delta_gamma = [ch](const Element& x) { return delta_gamma_coaction(x, *ch); };
    delta_e = [ch](const Element& x) { return delta_e_coaction(x, *ch); };
    sigma = qedtrees::sigma;
    photon_coaction = [this](const Element& x) { return delta_sigma(x, delta_p_gamma, delta_gamma, sigma); };
    electron_coaction = [this](const Element& x) {
        return apply_on_slot(delta_p_e(x), 0, {kElectron, kCharge},
                             [this](const Word& w) { return delta_e(Element::basis(kElectron, w)); });
    };
    electron_coaction_recursive = [ch](const Element& x) { return electron_renorm_coaction_recursive(x, *ch); };

    auto semidirect = [this](AlgebraTag p_tag) {
        const bool electron = p_tag == kElectron;
        Semidirect s;
        s.c_tag = kCharge;
        s.p_tag = p_tag;
        s.coproduct_c = [this](const Element& x) { return delta_alpha(x); };
        s.coproduct_p = [this, electron](const Element& x) { return electron ? delta_p_e(x) : delta_p_gamma(x); };
        s.coaction = [this, electron](const Element& x) { return electron ? delta_e(x) : delta_gamma(x); };
        s.antipode_c = [this](const Element& x) { return antipode_alpha(x); };
        s.antipode_p = [this, electron](const Element& x) { return electron ? antipode_p_e(x) : antipode_p_gamma(x); };
        return s;
    };
    qed = semidirect(kElectron);
    photon_qed = semidirect(kPhoton);
    renorm.photon_coaction = [this](const Element& x) { return photon_coaction(x); };
    renorm.electron_coaction = [this](const Element& x) { return electron_coaction(x); };
    renorm.antipode_p_e = [this](const Element& x) { return antipode_p_e(x); };
}

std::unique_ptr<Structures> Structures::standard()
{
    std::unique_ptr<Structures> s(new Structures());
    s->name_ = "standard";
    s->charge_ = std::make_unique<ChargeHopf>();
    s->wire();
    return s;
}

const std::vector<std::string>& Structures::corruption_names()
{
    static const std::vector<std::string> names = {
        "delta-p-e",    "delta-p-gamma",  "antipode-p-e", "antipode-p-gamma", "delta-alpha",
        "antipode-alpha", "delta-small",  "coaction-e",   "coaction-gamma",   "sigma",
    };
    return names;
}

std::unique_ptr<Structures> Structures::corrupted(std::string_view name)
{
    const auto& names = corruption_names();
    if (std::find(names.begin(), names.end(), name) == names.end())
        throw std::invalid_argument("unknown corruption: " + std::string(name));
    std::unique_ptr<Structures> s(new Structures());
    s->name_ = "corrupted " + std::string(name);
    if (name == "delta-alpha") {
        // Drops the middle term of Delta(V(deuxun)).
        const Tree target = deuxun();
        s->charge_ = std::make_unique<ChargeHopf>([target](Tree u, Tensor& coproduct) {
            if (u == target)
                coproduct = drop_one_term(coproduct);
        });
    } else {
        s->charge_ = std::make_unique<ChargeHopf>();
    }
    s->wire();

    const Tree du = deuxun();
    const Tree dd = deuxdeux();
    if (name == "delta-p-e") {
        s->delta_p_e = override_on_tree(kElectron, {kElectron, kElectron}, qedtrees::delta_p_e, dd,
                                        drop_one_term(pruning_coproduct_tree(kElectron, dd)));
    } else if (name == "delta-p-gamma") {
        s->delta_p_gamma = override_on_tree(kPhoton, {kPhoton, kPhoton}, qedtrees::delta_p_gamma, du,
                                            drop_one_term(pruning_coproduct_tree(kPhoton, du)));
    } else if (name == "antipode-p-e") {
        s->antipode_p_e = override_on_word(qedtrees::antipode_p_e, {dd},
                                           drop_one_term(pruning_antipode_tree(kElectron, dd)));
    } else if (name == "antipode-p-gamma") {
        s->antipode_p_gamma = override_on_word(qedtrees::antipode_p_gamma, {du},
                                               drop_one_term(pruning_antipode_tree(kPhoton, du)));
    } else if (name == "antipode-alpha") {
        const ChargeHopf* ch = &s->charge();
        s->antipode_alpha = override_on_word([ch](const Element& x) { return ch->antipode(x); }, {du},
                                             drop_one_term(ch->antipode(Element::basis(kCharge, {du}))));
    } else if (name == "delta-small") {
        // delta on the tree V(deuxun), read as the ChargeNC word [deuxun].
        const ChargeHopf* ch = &s->charge();
        s->delta_small = override_on_word([ch](const Element& x) { return ch->coaction(x); }, {du},
                                          drop_one_term(ch->coaction(Element::basis(kChargeNC, {du}))));
    } else if (name == "coaction-e") {
        s->delta_e = override_on_tree(kElectron, {kElectron, kCharge}, s->delta_e, du,
                                      drop_one_term(tree_coaction(kElectron, du, s->charge())));
    } else if (name == "coaction-gamma") {
        s->delta_gamma = override_on_tree(kPhoton, {kPhoton, kCharge}, s->delta_gamma, du,
                                          drop_one_term(tree_coaction(kPhoton, du, s->charge())));
    } else if (name == "sigma") {
        s->sigma = override_on_word(qedtrees::sigma, {du}, embed_tree(kCharge, dd));
    }
    return s;
}

// ------------------------------------------------------------ sweeping

namespace {

using Verdict = std::optional<std::string>;

template <typename Item>
LawResult sweep(const std::string& suite, const std::string& law, const std::vector<Item>& items, unsigned jobs,
                const std::function<Verdict(const Item&)>& check)
{
    LawResult result{suite, law, items.size(), true, {}};
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> first_failure{items.size()};
    std::mutex mutex;
    std::string message;

    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= items.size() || i > first_failure.load())
                return;
            Verdict verdict;
            try {
                verdict = check(items[i]);
            } catch (const std::exception& ex) {
                verdict = std::string("exception: ") + ex.what();
            }
            if (!verdict)
                continue;
            std::lock_guard lock(mutex);
            if (i < first_failure.load()) {
                first_failure.store(i);
                message = std::move(*verdict);
            }
        }
    };
    const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(items.size())));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned k = 0; k < threads; ++k)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }
    if (first_failure.load() < items.size()) {
        result.passed = false;
        result.counterexample = message;
    }
    return result;
}

Verdict differ(const std::string& input, const Tensor& lhs, const Tensor& rhs)
{
    if (lhs == rhs)
        return std::nullopt;
    return "at " + input + ": lhs - rhs = " + to_text(lhs - rhs);
}

Verdict differ(const std::string& input, const Element& lhs, const Element& rhs)
{
    if (lhs == rhs)
        return std::nullopt;
    return "at " + input + ": lhs - rhs = " + to_text(lhs - rhs);
}

Verdict require(bool ok, const std::string& what)
{
    if (ok)
        return std::nullopt;
    return what;
}

std::string describe(const Element& x) { return to_text(x); }
std::string describe(const Tensor& x) { return to_text(x); }

struct HopfFamily {
    std::string name;
    AlgebraTag tag;
    std::vector<Element> basis;
    LinearMap coproduct;
    ElementMap antipode;
};

std::vector<HopfFamily> hopf_families(const Structures& m, std::uint32_t order)
{
    std::vector<HopfFamily> out;
    out.push_back({"He", kElectron, basis_up_to(kElectron, order), m.delta_p_e, m.antipode_p_e});
    out.push_back({"Hgamma", kPhoton, basis_up_to(kPhoton, order), m.delta_p_gamma, m.antipode_p_gamma});
    out.push_back({"Halpha", kCharge, basis_up_to(kCharge, order + 2), m.delta_alpha, m.antipode_alpha});
    out.push_back({"HalphaNC", kChargeNC, basis_up_to(kChargeNC, order + 2), m.delta_alpha_nc, m.antipode_alpha_nc});
    return out;
}

std::vector<std::pair<std::string, const Semidirect*>> semidirect_families(const Structures& m)
{
    return {{"Hqed", &m.qed}, {"Halpha x| Hgamma", &m.photon_qed}};
}

Tensor coproduct_on_slot(const Tensor& t, std::size_t slot, AlgebraTag tag, const LinearMap& coproduct)
{
    return apply_on_slot(t, slot, {tag, tag}, [&](const Word& w) { return coproduct(Element::basis(tag, w)); });
}

Tensor semidirect_on_slots(const Tensor& t, std::size_t first, const Semidirect& sd)
{
    return apply_on_slots(t, first, 2, {sd.c_tag, sd.p_tag, sd.c_tag, sd.p_tag},
                          [&](const Tensor::Key& key) { return sd.coproduct(Tensor::basis(sd.tags(), key)); });
}

Tensor semidirect_antipode_on_slots(const Tensor& t, std::size_t first, const Semidirect& sd)
{
    return apply_on_slots(t, first, 2, sd.tags(),
                          [&](const Tensor::Key& key) { return sd.antipode(Tensor::basis(sd.tags(), key)); });
}

// ------------------------------------------------------------ suites

void suite_trees(std::vector<LawResult>& out, const CheckOptions& o)
{
    const std::string s = "trees";
    const auto small = trees_up_to(6);
    const auto medium = trees_up_to(8);
    std::vector<std::array<Tree, 3>> triples;
    for (Tree a : small)
        for (Tree b : small)
            for (Tree c : small)
                if (a.order() + b.order() + c.order() <= 6)
                    triples.push_back({a, b, c});
    out.push_back(sweep<std::array<Tree, 3>>(s, "over is associative", triples, o.jobs, [](const auto& x) {
        return require(over(over(x[0], x[1]), x[2]) == over(x[0], over(x[1], x[2])),
                       "at " + render(x[0]) + ", " + render(x[1]) + ", " + render(x[2]));
    }));
    out.push_back(sweep<std::array<Tree, 3>>(s, "under is associative", triples, o.jobs, [](const auto& x) {
        return require(under(under(x[0], x[1]), x[2]) == under(x[0], under(x[1], x[2])),
                       "at " + render(x[0]) + ", " + render(x[1]) + ", " + render(x[2]));
    }));
    out.push_back(sweep<Tree>(s, "e is a unit for over and under", medium, o.jobs, [](Tree t) {
        const Tree e;
        return require(over(t, e) == t && over(e, t) == t && under(t, e) == t && under(e, t) == t, "at " + render(t));
    }));
    out.push_back(sweep<Tree>(s, "t = t^l / V(t^r) = (t^l v e) \\ t^r", medium, o.jobs, [](Tree t) -> Verdict {
        if (t.is_root())
            return std::nullopt;
        const Tree e;
        return require(over(t.left(), v_wrap(t.right())) == t && under(graft(t.left(), e), t.right()) == t,
                       "at " + render(t));
    }));
    out.push_back(sweep<Tree>(s, "decompositions rebuild the tree", medium, o.jobs, [](Tree t) {
        const auto a = decompose_over(t);
        const auto b = decompose_under(t);
        return require(compose_over(a) == t && compose_under(b) == t, "at " + render(t));
    }));
    out.push_back(sweep<std::uint32_t>(s, "decompositions of distinct trees differ", {0, 1, 2, 3, 4, 5, 6, 7, 8}, o.jobs,
                                       [](std::uint32_t n) {
                                           std::set<std::vector<Tree>> a, b;
                                           for (Tree t : enumerate(n)) {
                                               a.insert(decompose_over(t));
                                               b.insert(decompose_under(t));
                                           }
                                           return require(a.size() == enumerate(n).size() &&
                                                              b.size() == enumerate(n).size(),
                                                          "collision at order " + std::to_string(n));
                                       }));
    out.push_back(sweep<Tree>(s, "parse(render(t)) = t", small, o.jobs, [](Tree t) {
        return require(parse_tree(render(t)) == t && parse_tree(canonical_name(t)) == t, "at " + render(t));
    }));
    out.push_back(sweep<std::uint32_t>(s, "enumeration strictly increasing", {0, 1, 2, 3, 4, 5, 6, 7, 8}, o.jobs,
                                       [](std::uint32_t n) {
                                           const auto& level = enumerate(n);
                                           for (std::size_t i = 0; i + 1 < level.size(); ++i)
                                               if (!(level[i] < level[i + 1]))
                                                   return Verdict("order " + std::to_string(n) + " at index " +
                                                                  std::to_string(i));
                                           return Verdict();
                                       }));
}

void suite_algebra(std::vector<LawResult>& out, const CheckOptions& o)
{
    const std::string s = "algebra";
    for (auto tag : {kPhoton, kElectron, kCharge, kChargeNC}) {
        const auto basis = basis_up_to(tag, 4);
        std::vector<std::array<Element, 3>> triples;
        for (const auto& a : basis)
            for (const auto& b : basis)
                for (const auto& c : basis)
                    if (total_order(tag, a.terms().begin()->first) + total_order(tag, b.terms().begin()->first) +
                            total_order(tag, c.terms().begin()->first) <=
                        4)
                        triples.push_back({a, b, c});
        const std::string name(tag_name(tag));
        out.push_back(sweep<std::array<Element, 3>>(s, name + ": associativity and distributivity", triples, o.jobs,
                                                    [](const auto& x) -> Verdict {
                                                        if (auto v = differ(describe(x[0]) + ", " + describe(x[1]) +
                                                                                ", " + describe(x[2]),
                                                                            as_tensor((x[0] * x[1]) * x[2]),
                                                                            as_tensor(x[0] * (x[1] * x[2]))))
                                                            return v;
                                                        return differ("distributivity " + describe(x[0]),
                                                                      as_tensor(x[0] * (x[1] + x[2])),
                                                                      as_tensor(x[0] * x[1] + x[0] * x[2]));
                                                    }));
        out.push_back(sweep<Element>(s, name + ": unit and grading", basis, o.jobs, [tag](const Element& x) -> Verdict {
            const auto one = Element::unit(tag);
            if (!(one * x == x && x * one == x))
                return "unit law at " + describe(x);
            const auto grades = grade_components(x * x);
            return require(grades.size() == 1 &&
                               grades.begin()->first == 2 * total_order(tag, x.terms().begin()->first),
                           "grading at " + describe(x));
        }));
    }
    const auto charge = basis_up_to(kCharge, 5);
    std::vector<std::pair<Element, Element>> pairs;
    for (const auto& a : charge)
        for (const auto& b : charge)
            if (total_order(kCharge, a.terms().begin()->first) + total_order(kCharge, b.terms().begin()->first) <= 5)
                pairs.emplace_back(a, b);
    out.push_back(sweep<std::pair<Element, Element>>(s, "Halpha is commutative", pairs, o.jobs, [](const auto& p) {
        return differ(describe(p.first) + ", " + describe(p.second), as_tensor(p.first * p.second),
                      as_tensor(p.second * p.first));
    }));
    std::vector<std::pair<Tree, Tree>> tree_pairs;
    for (Tree a : trees_up_to(4))
        for (Tree b : trees_up_to(4))
            if (a.order() + b.order() <= 4)
                tree_pairs.emplace_back(a, b);
    out.push_back(sweep<std::pair<Tree, Tree>>(s, "embedding of (Y, /) is multiplicative", tree_pairs, o.jobs,
                                               [](const auto& p) -> Verdict {
                                                   for (auto tag : {kCharge, kChargeNC})
                                                       if (auto v = differ(render(p.first) + " / " + render(p.second),
                                                                           as_tensor(embed_tree(tag, over(p.first, p.second))),
                                                                           as_tensor(embed_tree(tag, p.first) *
                                                                                     embed_tree(tag, p.second))))
                                                           return v;
                                                   return std::nullopt;
                                               }));
}

void suite_coassoc(std::vector<LawResult>& out, const Structures& m, const CheckOptions& o)
{
    const std::string s = "coassoc";
    for (const auto& f : hopf_families(m, o.order)) {
        out.push_back(sweep<Element>(s, f.name + ": (D (x) Id) D = (Id (x) D) D", f.basis, o.jobs, [&](const Element& x) {
            const Tensor d = f.coproduct(x);
            return differ(describe(x), coproduct_on_slot(d, 0, f.tag, f.coproduct),
                          coproduct_on_slot(d, 1, f.tag, f.coproduct));
        }));
    }
    for (const auto& [name, sd] : semidirect_families(m)) {
        const auto basis = semidirect_basis(sd->p_tag, o.order);
        out.push_back(sweep<Tensor>(s, name + ": (D (x) Id) D = (Id (x) D) D", basis, o.jobs, [sd](const Tensor& x) {
            const Tensor d = sd->coproduct(x);
            return differ(describe(x), semidirect_on_slots(d, 0, *sd), semidirect_on_slots(d, 2, *sd));
        }));
    }
}

void suite_counit(std::vector<LawResult>& out, const Structures& m, const CheckOptions& o)
{
    const std::string s = "counit";
    for (const auto& f : hopf_families(m, o.order)) {
        out.push_back(sweep<Element>(s, f.name + ": (eps (x) Id) D = Id = (Id (x) eps) D", f.basis, o.jobs,
                                     [&](const Element& x) -> Verdict {
                                         const Tensor d = f.coproduct(x);
                                         if (auto v = differ("left, " + describe(x), to_element(counit_slot(d, 0)), x))
                                             return v;
                                         return differ("right, " + describe(x), to_element(counit_slot(d, 1)), x);
                                     }));
    }
    for (const auto& [name, sd] : semidirect_families(m)) {
        const auto basis = semidirect_basis(sd->p_tag, o.order);
        out.push_back(sweep<Tensor>(s, name + ": (eps (x) Id) D = Id = (Id (x) eps) D", basis, o.jobs,
                                    [sd](const Tensor& x) -> Verdict {
                                        const Tensor d = sd->coproduct(x);
                                        if (auto v = differ("left, " + describe(x),
                                                            counit_slot(counit_slot(d, 0), 0), x))
                                            return v;
                                        return differ("right, " + describe(x), counit_slot(counit_slot(d, 3), 2), x);
                                    }));
    }
}

void suite_antipode(std::vector<LawResult>& out, const Structures& m, const CheckOptions& o)
{
    const std::string s = "antipode";
    for (const auto& f : hopf_families(m, o.order)) {
        out.push_back(sweep<Element>(s, f.name + ": m(S (x) Id) D = m(Id (x) S) D = 1 eps", f.basis, o.jobs,
                                     [&](const Element& x) -> Verdict {
                                         const Tensor d = f.coproduct(x);
                                         const Element expected = counit(x) * Element::unit(f.tag);
                                         auto s_on = [&](std::size_t slot) {
                                             return multiply_slots(map_slot(d, slot, f.tag, [&](const Word& w) {
                                                 return f.antipode(Element::basis(f.tag, w));
                                             }));
                                         };
                                         if (auto v = differ("left, " + describe(x), s_on(0), expected))
                                             return v;
                                         return differ("right, " + describe(x), s_on(1), expected);
                                     }));
    }
    for (const auto& [name, sd] : semidirect_families(m)) {
        const auto basis = semidirect_basis(sd->p_tag, o.order);
        out.push_back(sweep<Tensor>(s, name + ": m(S (x) Id) D = m(Id (x) S) D = 1 eps", basis, o.jobs,
                                    [sd](const Tensor& x) -> Verdict {
                                        const Tensor d = sd->coproduct(x);
                                        Tensor expected(sd->tags());
                                        expected.add_term({{}, {}}, sd->counit(x));
                                        auto s_on = [&](std::size_t first) {
                                            Tensor t = semidirect_antipode_on_slots(d, first, *sd);
                                            t = slot_multiply(t, 0, 2, 0);
                                            return slot_multiply(t, 1, 2, 1);
                                        };
                                        if (auto v = differ("left, " + describe(x), s_on(0), expected))
                                            return v;
                                        return differ("right, " + describe(x), s_on(2), expected);
                                    }));
    }
}

void suite_coaction(std::vector<LawResult>& out, const Structures& m, const CheckOptions& o)
{
    const std::string s = "coaction";
    struct Coaction {
        std::string name;
        AlgebraTag tag;
        LinearMap delta;
        LinearMap coproduct;
    };
    const std::vector<Coaction> coactions = {{"delta^gamma", kPhoton, m.delta_gamma, m.delta_p_gamma},
                                             {"delta^e", kElectron, m.delta_e, m.delta_p_e}};
    for (const auto& c : coactions) {
        const auto basis = basis_up_to(c.tag, o.order);
        out.push_back(sweep<Element>(s, c.name + ": (D1) (delta (x) Id) delta = (Id (x) D^alpha) delta", basis, o.jobs,
                                     [&](const Element& x) {
                                         const Tensor d = c.delta(x);
                                         const Tensor lhs = apply_on_slot(d, 0, {c.tag, kCharge}, [&](const Word& w) {
                                             return c.delta(Element::basis(c.tag, w));
                                         });
                                         return differ(describe(x), lhs, coproduct_on_slot(d, 1, kCharge, m.delta_alpha));
                                     }));
        out.push_back(sweep<Element>(s, c.name + ": (D2) (D^p (x) Id) delta = m_24 (delta (x) delta) D^p", basis,
                                     o.jobs, [&](const Element& x) {
                                         const Tensor lhs = coproduct_on_slot(c.delta(x), 0, c.tag, c.coproduct);
                                         auto on = [&](const Word& w) { return c.delta(Element::basis(c.tag, w)); };
                                         Tensor rhs = apply_on_slot(c.coproduct(x), 1, {c.tag, kCharge}, on);
                                         rhs = apply_on_slot(rhs, 0, {c.tag, kCharge}, on);
                                         return differ(describe(x), lhs, slot_multiply(rhs, 1, 3, 2));
                                     }));
        out.push_back(sweep<Element>(s, c.name + ": (Id (x) eps) delta = Id", basis, o.jobs, [&](const Element& x) {
            return differ(describe(x), to_element(counit_slot(c.delta(x), 1)), x);
        }));
        const auto trees = trees_up_to(o.order + 2);
        out.push_back(sweep<Tree>(s, c.name + ": agrees with its recursion on trees", trees, o.jobs, [&](Tree t) {
            return differ(render(t), c.delta(embed_tree(c.tag, t)), tree_coaction_recursive(c.tag, t, m.charge()));
        }));
    }

    const auto trees = trees_up_to(o.order + 2);
    out.push_back(sweep<Tree>(s, "delta on Halpha: (delta (x) Id) delta = (Id (x) D^alpha) delta", trees, o.jobs,
                              [&](Tree t) {
                                  const Tensor d = m.delta_small(embed_tree(kChargeNC, t));
                                  const Tensor lhs = apply_on_slot(d, 0, {kChargeNC, kCharge}, [&](const Word& w) {
                                      return m.delta_small(Element::basis(kChargeNC, w));
                                  });
                                  return differ(render(t), lhs, coproduct_on_slot(d, 1, kCharge, m.delta_alpha));
                              }));
    out.push_back(sweep<Tree>(s, "delta on Halpha: D^alpha V(u) = 1 (x) V(u) + delta V(u)", trees, o.jobs,
                              [&](Tree u) {
                                  const Tensor nc = m.delta_small(Element::basis(kChargeNC, {u}));
                                  Tensor rhs = abelianize_slot(nc, 0);
                                  rhs.add_term({{}, {u}}, 1);
                                  return differ("V(" + render(u) + ")",
                                                m.delta_alpha(Element::basis(kCharge, {u})), rhs);
                              }));

    const auto electron = basis_up_to(kElectron, o.order);
    out.push_back(sweep<Element>(s, "Delta^e: (Delta^e (x) Id) Delta^e = (Id (x) D^qed) Delta^e", electron, o.jobs,
                                 [&](const Element& x) {
                                     const Tensor d = m.electron_coaction(x);
                                     const Tensor lhs = apply_on_slot(d, 0, {kElectron, kCharge, kElectron},
                                                                      [&](const Word& w) {
                                                                          return m.electron_coaction(
                                                                              Element::basis(kElectron, w));
                                                                      });
                                     return differ(describe(x), lhs, semidirect_on_slots(d, 1, m.qed));
                                 }));
    std::vector<std::pair<Element, Element>> pairs;
    for (const auto& a : electron)
        for (const auto& b : electron)
            if (total_order(kElectron, a.terms().begin()->first) + total_order(kElectron, b.terms().begin()->first) <=
                o.order)
                pairs.emplace_back(a, b);
    out.push_back(sweep<std::pair<Element, Element>>(s, "Delta^e is an algebra morphism", pairs, o.jobs,
                                                     [&](const auto& p) {
                                                         return differ(describe(p.first) + ", " + describe(p.second),
                                                                       m.electron_coaction(p.first * p.second),
                                                                       m.electron_coaction(p.first) *
                                                                           m.electron_coaction(p.second));
                                                     }));
    out.push_back(sweep<Tree>(s, "Delta^e agrees with its recursion", trees, o.jobs, [&](Tree t) {
        const auto x = embed_tree(kElectron, t);
        return differ(render(t), m.electron_coaction(x), m.electron_coaction_recursive(x));
    }));

    const auto photon = basis_up_to(kPhoton, o.order);
    out.push_back(sweep<Element>(s, "Delta^gamma: (Delta^gamma (x) Id) Delta^gamma = (Id (x) D^alpha) Delta^gamma",
                                 photon, o.jobs, [&](const Element& x) {
                                     const Tensor d = m.photon_coaction(x);
                                     const Tensor lhs = apply_on_slot(d, 0, {kPhoton, kCharge}, [&](const Word& w) {
                                         return m.photon_coaction(Element::basis(kPhoton, w));
                                     });
                                     return differ(describe(x), lhs, coproduct_on_slot(d, 1, kCharge, m.delta_alpha));
                                 }));
    out.push_back(sweep<Tree>(s, "single trees on the left of delta^gamma, delta^e, Delta^gamma", trees, o.jobs,
                              [&](Tree t) -> Verdict {
                                  for (const Tensor& d : {m.delta_gamma(embed_tree(kPhoton, t)),
                                                          m.delta_e(embed_tree(kElectron, t)),
                                                          m.photon_coaction(embed_tree(kPhoton, t))})
                                      for (const auto& [key, c] : d.terms())
                                          if (key[0].size() > 1)
                                              return "at " + render(t) + ": " + to_text(d);
                                  return std::nullopt;
                              }));
}

void suite_intertwining(std::vector<LawResult>& out, const Structures& m, const CheckOptions& o)
{
    const std::string s = "intertwining";
    const auto photon = basis_up_to(kPhoton, o.order + 1);
    out.push_back(sweep<Element>(s, "D^alpha sigma = (sigma (x) Id) Delta^gamma", photon, o.jobs,
                                 [&](const Element& x) {
                                     const Tensor rhs = map_slot(m.photon_coaction(x), 0, kCharge, [&](const Word& w) {
                                         return m.sigma(Element::basis(kPhoton, w));
                                     });
                                     return differ(describe(x), m.delta_alpha(m.sigma(x)), rhs);
                                 }));
    out.push_back(sweep<Element>(s, "sigma is an algebra morphism", photon, o.jobs, [&](const Element& x) -> Verdict {
        Element product = Element::unit(kCharge);
        for (Tree t : x.terms().begin()->first)
            product = product * m.sigma(embed_tree(kPhoton, t));
        return differ(describe(x), m.sigma(x), product);
    }));
}

void suite_corollary(std::vector<LawResult>& out, const Structures& m, const CheckOptions& o)
{
    const std::string s = "corollary";
    const auto trees = trees_up_to(o.order + 2);
    out.push_back(sweep<Tree>(s, "Delta^gamma(t) = noncommutative D^alpha(t) on single trees", trees, o.jobs,
                              [&](Tree t) {
                                  const Tensor nc = m.delta_alpha_nc(embed_tree(kChargeNC, t));
                                  Tensor rhs({kPhoton, kCharge});
                                  for (const auto& [key, c] : nc.terms())
                                      rhs.add_term({letter(compose_over(key[0])), key[1]}, c);
                                  return differ(render(t), m.photon_coaction(embed_tree(kPhoton, t)), rhs);
                              }));
}

std::uint64_t catalan_number(std::uint32_t n)
{
    std::uint64_t c = 1;
    for (std::uint32_t k = 0; k < n; ++k)
        c = c * 2 * (2 * k + 1) / (k + 2);
    return c;
}

void suite_counts(std::vector<LawResult>& out, const Structures& m, const CheckOptions& o)
{
    const std::string s = "counts";
    std::vector<std::uint32_t> levels;
    for (std::uint32_t n = 0; n <= 12; ++n)
        levels.push_back(n);
    out.push_back(sweep<std::uint32_t>(s, "|Y_n| = Catalan(n), n <= 12", levels, 1, [](std::uint32_t n) {
        const auto size = enumerate(n).size();
        return require(size == catalan_number(n), "order " + std::to_string(n) + ": " + std::to_string(size) +
                                                      " trees, expected " + std::to_string(catalan_number(n)));
    }));
    const auto trees = trees_up_to(8);
    out.push_back(sweep<Tree>(s, "D^p_gamma(t) has |decompose_over(t)| + 1 terms", trees, o.jobs, [&](Tree t) {
        const auto d = m.delta_p_gamma(embed_tree(kPhoton, t));
        return require(d.size() == decompose_over(t).size() + 1,
                       "at " + render(t) + ": " + std::to_string(d.size()) + " terms");
    }));
    out.push_back(sweep<Tree>(s, "D^p_e(t) has |decompose_under(t)| + 1 terms", trees, o.jobs, [&](Tree t) {
        const auto d = m.delta_p_e(embed_tree(kElectron, t));
        return require(d.size() == decompose_under(t).size() + 1,
                       "at " + render(t) + ": " + std::to_string(d.size()) + " terms");
    }));
    out.push_back(sweep<Tree>(s, "pruning recursion = sum over factorizations", trees, o.jobs, [&](Tree t) -> Verdict {
        if (auto v = differ("photon " + render(t), m.delta_p_gamma(embed_tree(kPhoton, t)),
                            pruning_coproduct_factorized(kPhoton, t)))
            return v;
        return differ("electron " + render(t), m.delta_p_e(embed_tree(kElectron, t)),
                      pruning_coproduct_factorized(kElectron, t));
    }));
    out.push_back(sweep<std::uint32_t>(s, "D^p_e is not cocommutative (witness of order <= 3)", {3}, 1,
                                       [&](std::uint32_t n) -> Verdict {
                                           for (Tree t : trees_up_to(n)) {
                                               const auto d = m.delta_p_e(embed_tree(kElectron, t));
                                               if (!(swap_slots(d, 0, 1) == d))
                                                   return std::nullopt;
                                           }
                                           return "every tree of order <= " + std::to_string(n) +
                                                  " has a cocommutative coproduct";
                                       }));
    out.push_back(sweep<std::uint32_t>(s, "S^p_e o S^p_e != Id (witness of order <= 5)", {5}, 1,
                                       [&](std::uint32_t n) -> Verdict {
                                           for (const auto& x : basis_up_to(kElectron, n))
                                               if (!(m.antipode_p_e(m.antipode_p_e(x)) == x))
                                                   return std::nullopt;
                                           return "S^p_e is an involution up to order " + std::to_string(n);
                                       }));
    const auto charge_trees = trees_up_to(o.order + 2);
    out.push_back(sweep<Tree>(s, "D^alpha(t) holds t (x) 1 and 1 (x) t once", charge_trees, o.jobs,
                              [&](Tree t) -> Verdict {
                                  if (t.is_root())
                                      return std::nullopt;
                                  const auto x = embed_tree(kCharge, t);
                                  const auto w = x.terms().begin()->first;
                                  const auto d = m.delta_alpha(x);
                                  const auto n = total_order(kCharge, w);
                                  std::size_t left = 0, right = 0;
                                  for (const auto& [key, c] : d.terms()) {
                                      left += total_order(kCharge, key[0]) == n;
                                      right += total_order(kCharge, key[1]) == n;
                                  }
                                  return require(left == 1 && right == 1 && d.coefficient({w, {}}) == 1 &&
                                                     d.coefficient({{}, w}) == 1,
                                                 "at " + render(t) + ": " + to_text(d));
                              }));
}

struct SeriesCase {
    TruncatedSeries f, g, h, phi, psi, chi;
};

SeriesCase random_case(std::uint64_t seed, std::size_t n, std::size_t d)
{
    std::mt19937_64 rng(seed * 7919 + d);
    SeriesCase c;
    c.f = random_gp(rng, n, d);
    c.g = random_gp(rng, n, d);
    c.h = random_gp(rng, n, d);
    c.phi = random_gc(rng, n, d, true);
    c.psi = random_gc(rng, n, d, true);
    c.chi = random_gc(rng, n, d, true);
    return c;
}

Verdict series_equal(const std::string& what, const TruncatedSeries& a, const TruncatedSeries& b)
{
    if (a == b)
        return std::nullopt;
    return what + ": " + to_json(a).dump() + " != " + to_json(b).dump();
}

Verdict pair_equal(const std::string& what, const SemidirectPair& a, const SemidirectPair& b)
{
    if (auto v = series_equal(what + " (G^c part)", a.phi, b.phi))
        return v;
    return series_equal(what + " (G^p part)", a.f, b.f);
}

void suite_series(std::vector<LawResult>& out, const CheckOptions& o)
{
    const std::string s = "series";
    const std::size_t n = o.order;
    std::vector<std::uint64_t> seeds;
    for (unsigned k = 1; k <= o.seeds; ++k)
        seeds.push_back(k);
    const Cocycle cocycle = divide_by_alpha_cocycle;
    for (std::size_t d : {std::size_t{0}, std::size_t{2}}) {
        const std::string ring = d == 0 ? "scalar" : "2x2 matrix";
        auto law = [&](const std::string& name, std::function<Verdict(const SeriesCase&)> fn) {
            out.push_back(sweep<std::uint64_t>(s, ring + ": " + name, seeds, o.jobs, [&, fn](std::uint64_t seed) {
                auto v = fn(random_case(seed, n, d));
                if (v)
                    *v = "seed " + std::to_string(seed) + ": " + *v;
                return v;
            }));
        };
        const auto one = TruncatedSeries::one(n, d);
        const auto id = TruncatedSeries::variable(n, d);
        law("G^p associativity, unit, inverse", [&](const SeriesCase& c) -> Verdict {
            if (auto v = series_equal("(fg)h = f(gh)", (c.f * c.g) * c.h, c.f * (c.g * c.h)))
                return v;
            if (auto v = series_equal("1 f = f = f 1", one * c.f, c.f * one))
                return v;
            if (auto v = series_equal("1 f = f", one * c.f, c.f))
                return v;
            const auto inv = series_inverse(c.f);
            if (auto v = series_equal("f f^-1 = 1", c.f * inv, one))
                return v;
            return series_equal("f^-1 f = 1", inv * c.f, one);
        });
        law("G^c associativity, unit, inverse", [&](const SeriesCase& c) -> Verdict {
            if (auto v = series_equal("(phi psi) chi = phi (psi chi)", gc_compose(gc_compose(c.phi, c.psi), c.chi),
                                      gc_compose(c.phi, gc_compose(c.psi, c.chi))))
                return v;
            if (auto v = series_equal("id phi = phi", gc_compose(id, c.phi), c.phi))
                return v;
            if (auto v = series_equal("phi id = phi", gc_compose(c.phi, id), c.phi))
                return v;
            const auto inv = gc_inverse(c.phi);
            if (auto v = series_equal("phi phi^-1 = id", gc_compose(c.phi, inv), id))
                return v;
            return series_equal("phi^-1 phi = id", gc_compose(inv, c.phi), id);
        });
        law("semidirect product associativity, unit, inverse", [&](const SeriesCase& c) -> Verdict {
            const SemidirectPair a{c.phi, c.f}, b{c.psi, c.g}, e{c.chi, c.h};
            if (auto v = pair_equal("(ab)c = a(bc)", semidirect_multiply(semidirect_multiply(a, b), e),
                                    semidirect_multiply(a, semidirect_multiply(b, e))))
                return v;
            const auto unit = semidirect_identity(n, d);
            if (auto v = pair_equal("1 a = a", semidirect_multiply(unit, a), a))
                return v;
            if (auto v = pair_equal("a 1 = a", semidirect_multiply(a, unit), a))
                return v;
            const auto inv = semidirect_inverse(a);
            if (auto v = pair_equal("a a^-1 = 1", semidirect_multiply(a, inv), unit))
                return v;
            return pair_equal("a^-1 a = 1", semidirect_multiply(inv, a), unit);
        });
        law("f^(phi psi) = (f^phi)^psi and f^id = f", [&](const SeriesCase& c) -> Verdict {
            if (auto v = series_equal("f^(phi psi) = (f^phi)^psi", gp_action(c.f, gc_compose(c.phi, c.psi)),
                                      gp_action(gp_action(c.f, c.phi), c.psi)))
                return v;
            return series_equal("f^id = f", gp_action(c.f, id), c.f);
        });
        law("(fg)^phi = f^phi g^phi", [&](const SeriesCase& c) {
            return series_equal("(fg)^phi", gp_action(c.f * c.g, c.phi), gp_action(c.f, c.phi) * gp_action(c.g, c.phi));
        });
        law("(1, g)(phi, f) = (phi, g^phi f)", [&](const SeriesCase& c) {
            const auto product = semidirect_multiply({id, c.g}, {c.phi, c.f});
            return pair_equal("(1, g)(phi, f)", product, {c.phi, gp_action(c.g, c.phi) * c.f});
        });
        law("cocycle s(phi) = phi / a", [&](const SeriesCase& c) {
            const auto defect = cocycle_defect(cocycle, c.phi, c.psi);
            return series_equal("s(psi) s(phi psi)^-1 s(phi)^psi", defect, TruncatedSeries::one(defect.order(), d));
        });
        law("sigma action (f ._s phi) ._s psi = f ._s (phi psi)", [&](const SeriesCase& c) {
            return series_equal("sigma action", sigma_action(sigma_action(c.f, c.phi, cocycle), c.psi, cocycle),
                                sigma_action(c.f, gc_compose(c.phi, c.psi), cocycle));
        });
        law("perturbed cocycle is rejected", [&](const SeriesCase& c) -> Verdict {
            auto bent = [d, n](const TruncatedSeries& phi) {
                std::vector<RingValue> k(n + 1, RingValue::zero(d));
                k[0] = RingValue::identity(d);
                k[2] = RingValue::identity(d);
                return divide_by_variable(phi) * TruncatedSeries(n, k);
            };
            if (cocycle_check(bent, c.phi, c.psi))
                return std::string("perturbed cocycle accepted");
            const auto lhs = sigma_action(sigma_action(c.f, c.phi, bent), c.psi, bent);
            const auto rhs = sigma_action(c.f, gc_compose(c.phi, c.psi), bent);
            return require(!(lhs == rhs), "perturbed sigma action satisfies the action law");
        });
    }
}

void suite_dyson(std::vector<LawResult>& out, const Structures& m, const CheckOptions& o)
{
    const std::string s = "dyson";
    const std::size_t n = o.order;
    std::vector<std::uint64_t> seeds;
    for (unsigned k = 1; k <= o.dyson_seeds; ++k)
        seeds.push_back(k);
    for (std::size_t d : {std::size_t{0}, std::size_t{4}}) {
        const auto kind = d == 0 ? Character::Kind::Scalar : Character::Kind::Matrix;
        const std::string ring = d == 0 ? "scalar U" : "4x4 matrix U";
        out.push_back(sweep<std::uint64_t>(s, ring + ": Dbar Z3 = D(a0)", seeds, o.jobs, [&](std::uint64_t seed) {
            const auto u = make_toy_character(kPhoton, seed, kind, d, static_cast<std::uint32_t>(n));
            const auto cg = make_toy_character(kCharge, seed, Character::Kind::Scalar, 0, static_cast<std::uint32_t>(n));
            const auto report = dyson_check_photon(u, cg, n, m.renorm);
            return require(report.passed, "seed " + std::to_string(seed) + ": " + report.to_json().dump());
        }));
        out.push_back(sweep<std::uint64_t>(s, ring + ": Sbar Z2 = S(a0)", seeds, o.jobs, [&](std::uint64_t seed) {
            const auto u = make_toy_character(kElectron, seed, kind, d, static_cast<std::uint32_t>(n));
            const auto cg = make_toy_character(kCharge, seed, Character::Kind::Scalar, 0, static_cast<std::uint32_t>(n));
            const auto ce =
                make_toy_character(kElectron, seed + 1000, Character::Kind::Scalar, 0, static_cast<std::uint32_t>(n));
            const auto report = dyson_check_electron(u, cg, ce, n, m.renorm);
            return require(report.passed, "seed " + std::to_string(seed) + ": " + report.to_json().dump());
        }));
    }
    const auto trees = trees_up_to(static_cast<std::uint32_t>(n));
    out.push_back(sweep<Tree>(s, "zero counterterms give R = U", trees, o.jobs, [&](Tree t) {
        const auto ug = make_toy_character(kPhoton, 7, Character::Kind::Matrix, 2, static_cast<std::uint32_t>(n));
        const auto ue = make_toy_character(kElectron, 7, Character::Kind::Matrix, 2, static_cast<std::uint32_t>(n));
        const auto cg = Character::zero(kCharge);
        const auto ce = Character::zero(kElectron);
        const auto expected_g = t.is_root() ? ug.unit_value() : ug.value(t);
        const auto expected_e = t.is_root() ? ue.unit_value() : ue.value(t);
        return require(renormalized_photon(ug, cg, t, m.renorm) == expected_g &&
                           renormalized_electron(ue, cg, ce, t, m.renorm) == expected_e,
                       "at " + render(t));
    }));
    std::vector<std::pair<AlgebraTag, std::pair<Word, Word>>> word_pairs;
    for (auto tag : {kPhoton, kElectron, kCharge})
        for (const auto& a : words_up_to(tag, static_cast<std::uint32_t>(n)))
            for (const auto& b : words_up_to(tag, static_cast<std::uint32_t>(n)))
                if (total_order(tag, a) + total_order(tag, b) <= n)
                    word_pairs.push_back({tag, {a, b}});
    out.push_back(sweep<std::pair<AlgebraTag, std::pair<Word, Word>>>(
        s, "characters are multiplicative", word_pairs, o.jobs, [&](const auto& p) {
            const auto tag = p.first;
            const auto chi = make_toy_character(tag, 5, Character::Kind::Matrix, 2, static_cast<std::uint32_t>(n));
            const auto x = Element::basis(tag, p.second.first);
            const auto y = Element::basis(tag, p.second.second);
            return require(chi.evaluate(x * y) == chi.evaluate(x) * chi.evaluate(y),
                           std::string(tag_name(tag)) + " at " + describe(x) + ", " + describe(y));
        }));
    out.push_back(sweep<Tree>(s, "<chi (x) chi, D^p(t)> = coefficient of t in the squared tree series", trees, o.jobs,
                              [&](Tree t) -> Verdict {
                                  for (auto tag : {kPhoton, kElectron}) {
                                      const auto chi = make_toy_character(tag, 11, Character::Kind::Matrix, 2,
                                                                          static_cast<std::uint32_t>(n));
                                      auto value = [&](Tree x) { return x.is_root() ? chi.unit_value() : chi.value(x); };
                                      RingValue expected = RingValue::zero(2);
                                      for (Tree a : trees_up_to(t.order()))
                                          for (Tree b : enumerate(t.order() - a.order()))
                                              if ((tag == kPhoton ? over(a, b) : under(a, b)) == t)
                                                  expected += value(a) * value(b);
                                      const auto coproduct = tag == kPhoton ? m.delta_p_gamma(embed_tree(tag, t))
                                                                            : m.delta_p_e(embed_tree(tag, t));
                                      const auto got = pair_evaluate({&chi, &chi}, coproduct);
                                      if (!(got == expected))
                                          return std::string(tag_name(tag)) + " at " + render(t) + ": " +
                                                 to_string(got) + " != " + to_string(expected);
                                  }
                                  return std::nullopt;
                              }));
}

} // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = {"trees",        "algebra",   "coassoc", "counit", "antipode", "coaction",
                                                   "intertwining", "corollary", "counts",  "series", "dyson"};
    return names;
}

std::vector<LawResult> run_suite(std::string_view suite, const Structures& maps, const CheckOptions& options)
{
    std::vector<LawResult> out;
    if (suite == "all") {
        for (const auto& name : suite_names()) {
            auto part = run_suite(name, maps, options);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    if (suite == "trees")
        suite_trees(out, options);
    else if (suite == "algebra")
        suite_algebra(out, options);
    else if (suite == "coassoc")
        suite_coassoc(out, maps, options);
    else if (suite == "counit")
        suite_counit(out, maps, options);
    else if (suite == "antipode")
        suite_antipode(out, maps, options);
    else if (suite == "coaction")
        suite_coaction(out, maps, options);
    else if (suite == "intertwining")
        suite_intertwining(out, maps, options);
    else if (suite == "corollary")
        suite_corollary(out, maps, options);
    else if (suite == "counts")
        suite_counts(out, maps, options);
    else if (suite == "series")
        suite_series(out, options);
    else if (suite == "dyson")
        suite_dyson(out, maps, options);
    else
        throw std::invalid_argument("unknown suite: " + std::string(suite));
    return out;
}

std::string format_result(const LawResult& r)
{
    std::string line = std::string(r.passed ? "PASS" : "FAIL") + "  " + r.suite + "  " + r.law + "  (" +
                       std::to_string(r.cases) + " cases)";
    if (!r.passed)
        line += "\n      counterexample " + r.counterexample;
    return line;
}

} // namespace qedtrees
