#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "qedtrees/qed.hpp"
#include "qedtrees/renormalization.hpp"

namespace qedtrees {

// ------------------------------------------------------------ bases

/// Every basis word of total order <= max_order (the unit included).
std::vector<Word> words_up_to(AlgebraTag tag, std::uint32_t max_order);
std::vector<Element> basis_up_to(AlgebraTag tag, std::uint32_t max_order);

/// Every tree of order <= max_order.
std::vector<Tree> trees_up_to(std::uint32_t max_order);

/// Basis a (x) b of Halpha (x) He (or Halpha (x) Hgamma) of total order <= max_order.
std::vector<Tensor> semidirect_basis(AlgebraTag p_tag, std::uint32_t max_order);

// ------------------------------------------------------------ structure maps

/// Every structure map the suites exercise, as replaceable function values.
/// The corrupted variants each alter exactly one map; they exist as negative
/// controls for the suites.
class Structures {
public:
    static std::unique_ptr<Structures> standard();
    /// Throws std::invalid_argument on an unknown name.
    static std::unique_ptr<Structures> corrupted(std::string_view name);
    static const std::vector<std::string>& corruption_names();

    const std::string& name() const { return name_; }
    const ChargeHopf& charge() const { return *charge_; }

    LinearMap delta_p_e;
    LinearMap delta_p_gamma;
    ElementMap antipode_p_e;
    ElementMap antipode_p_gamma;
    LinearMap delta_alpha;
    LinearMap delta_alpha_nc;
    ElementMap antipode_alpha;
    ElementMap antipode_alpha_nc;
    /// delta on Halpha read on trees: ChargeNC -> ChargeNC (x) Charge.
    LinearMap delta_small;
    LinearMap delta_gamma;
    LinearMap delta_e;
    ElementMap sigma;
    LinearMap photon_coaction;
    LinearMap electron_coaction;
    LinearMap electron_coaction_recursive;
    Semidirect qed;
    Semidirect photon_qed;
    RenormalizationMaps renorm;

private:
    Structures() = default;
    void wire();

    std::string name_;
    std::unique_ptr<ChargeHopf> charge_;
};

// ------------------------------------------------------------ suites

struct LawResult {
    std::string suite;
    std::string law;
    std::size_t cases = 0;
    bool passed = true;
    std::string counterexample;
};

struct CheckOptions {
    /// Total order of the basis sweeps; single-tree sweeps go two orders higher.
    std::uint32_t order = 4;
    unsigned jobs = 1;
    /// Seeded instances for the series suite.
    unsigned seeds = 50;
    unsigned dyson_seeds = 20;
};

/// trees, algebra, coassoc, counit, antipode, coaction, intertwining,
/// corollary, counts, series, dyson.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Throws std::invalid_argument
/// on an unknown name.
std::vector<LawResult> run_suite(std::string_view suite, const Structures& maps, const CheckOptions& options);

std::string format_result(const LawResult& r);

} // namespace qedtrees
