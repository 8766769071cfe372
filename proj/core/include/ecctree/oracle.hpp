#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ecctree/rational.hpp"
#include "ecctree/tree.hpp"

namespace ecc {

struct EnumerationCaps {
    int max_order = 10;                    // all-of-order-n enumeration
    long long max_class_size = 10'000'000; // labeled trees per class
};

// Default caps, with ECC_CAP (when set) overriding max_order.
EnumerationCaps caps_from_env();

struct TreeClassSpec {
    enum class Kind { all_of_order, degree_sequence, level_degree_sequence };
    Kind kind = Kind::all_of_order;
    int n = 0;
    std::optional<DegreeSequence> ds;
    std::optional<LevelDegreeSequence> lds;

    static TreeClassSpec all_of_order(int n);
    static TreeClassSpec degree_class(DegreeSequence sequence);
    static TreeClassSpec level_class(LevelDegreeSequence sequence);
};

struct Objective {
    enum class Kind {
        total_ecc,            // Ecc(T)
        total_over_center,    // Ecc(T)/rad(T)
        total_over_leaf_min,  // min over leaves of Ecc(T)/ecc(u)
        total_over_leaf_max,  // max over leaves of Ecc(T)/ecc(u)
        leaf_over_center_min, // min over leaves of ecc(u)/rad(T)
        leaf_over_center_max, // max over leaves of ecc(u)/rad(T)
        leaf_over_leaf_max,   // max over leaf pairs of ecc(u)/ecc(w)
        count_ecc_at_most,    // #{v : ecc(v) <= ell}
    };
    Kind kind = Kind::total_ecc;
    int ell = 0; // count_ecc_at_most only
};

struct SearchReport {
    long long class_size_labeled = 0;
    long long class_size_iso = 0; // -1 when isomorphism counting is off
    Rational min_value;
    Rational max_value;
    std::vector<std::string> min_witnesses; // canonical forms, ascending
    std::vector<std::string> max_witnesses;
};

std::string to_json(const SearchReport& report);

struct SearchOptions {
    EnumerationCaps caps;
    int jobs = 1; // 0 = hardware concurrency
    bool count_iso = true;
    bool track_min_witnesses = true;
    bool track_max_witnesses = true;
};

// Exact extremes of the objective over the class, with the attaining
// isomorphism classes as canonical forms. Deterministic for any jobs value.
SearchReport extremal_search(const TreeClassSpec& spec, const Objective& objective,
                             const SearchOptions& options = {});

long long count_labeled_trees(int n); // n^(n-2)
long long count_trees_with_degree_sequence(const DegreeSequence& ds); // (n-2)!/prod (d_i-1)!

// Streams all labeled trees of order n in Pruefer order.
void for_each_labeled_tree(int n, const EnumerationCaps& caps,
                           const std::function<void(const Tree&)>& fn);

// Streams all labeled trees realizing ds (vertex i has degree ds[i] as
// listed, label i appearing ds[i]-1 times in the Pruefer string).
void for_each_tree_with_degree_sequence(const DegreeSequence& ds, const EnumerationCaps& caps,
                                        const std::function<void(const Tree&)>& fn);

// All rooted isomorphism classes realizing lds (every degree assignment and
// parent matching, deduplicated by rooted canonical form), ordered by
// canonical form.
std::vector<RootedTree> enumerate_rooted_with_level_sequence(const LevelDegreeSequence& lds,
                                                             const EnumerationCaps& caps);

// One representative per isomorphism class of order n, ordered by
// canonical form.
std::vector<Tree> free_tree_representatives(int n, const EnumerationCaps& caps, int jobs = 1);

// Every tree degree sequence of order n (n >= 2), lexicographically
// descending.
std::vector<DegreeSequence> all_degree_sequences(int n);

// Every level-degree sequence with 2..max_vertices vertices.
std::vector<LevelDegreeSequence> all_level_degree_sequences(int max_vertices);

enum class TheoremId {
    T2_1, T2_2, T2_3, T2_4, T2_5, T2_6, // ratio bounds
    P3_1,                               // star minimizes Ecc
    P3_4,                               // greedy caterpillar maximizes Ecc in its class
    L_level,                            // level-greedy maximizes count-ecc<=l
    T_greedymin,                        // greedy tree maximizes count-ecc<=l / minimizes Ecc
    T_majorization,                     // Ecc of greedy trees monotone under majorization
};

std::optional<TheoremId> parse_theorem_id(std::string_view text);
std::string theorem_name(TheoremId id);

struct InstanceResult {
    std::string instance; // "n=6", "ds=3,2,2,1,1,1", "lds=2;2,1;1", ...
    bool bound_holds = false;
    bool attained = false;
    enum class Tri { yes, no, not_checked } characterization_match = Tri::not_checked;
    std::string counterexample; // canonical form of a violating tree, if any
    long long class_size_labeled = 0;
    bool pass = false;
};

struct VerificationReport {
    TheoremId theorem = TheoremId::T2_1;
    std::vector<InstanceResult> instances;
    bool pass = false;
};

std::string to_json(const InstanceResult& instance, TheoremId theorem);
std::string to_json(const VerificationReport& report);

struct VerifyOptions {
    int n_min = -1; // -1: theorem default
    int n_max = -1;
    EnumerationCaps caps;
    int jobs = 1; // 0 = hardware concurrency
    std::function<void(const InstanceResult&)> on_instance; // streaming hook
};

// Machine check of one theorem over every instance in range: the bound
// holds for every tree of the class, is attained, and the attaining set
// matches the characterized family where the theorem gives one.
VerificationReport verify_theorem(TheoremId id, const VerifyOptions& options = {});

} // namespace ecc
