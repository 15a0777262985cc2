#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "invariants.hpp"
#include "serialize.hpp"
#include "witnesses.hpp"

namespace su21 {


using Bindings = std::map<std::string, FieldElement>;

inline std::string bindings_str(const Bindings& b) {
    std::string s;
    for (const auto& [k, v] : b) {
        if (!s.empty()) s += ",";
        s += k + "=" + v.str();
    }
    return s;
}

// ---------------------------------------------------------------------------
// Table rows: the classified real subalgebras (tables 1..6) plus the
// auxiliary redundant one-parameter families v_1..v_4 (table 0).
// ---------------------------------------------------------------------------

struct TableRow {
    std::string label;
    int table = 0; // 1..6; 0 for auxiliary families
    int dim = 0;
    bool parametrized = false;
    std::string range_note;
    // Rows of fixed span ignore the parameter.
    std::function<std::vector<Mat3>(const FieldElement&)> vectors;
    // Returns an error message when the parameter violates the recorded range.
    std::function<std::optional<std::string>(const FieldElement&)> validate;
};

namespace cat_detail {

inline Mat3 A(int k) { return a_basis()[static_cast<size_t>(k - 1)]; }
inline Mat3 C(Chev c) { return chevalley_basis()[c]; }
inline FieldElement R2() { return FieldElement::sqrt2(); }

inline std::optional<std::string> real_param(const FieldElement& l) {
    if (!l.is_real()) return "parameter must be real";
    return std::nullopt;
}

} // namespace cat_detail

inline const std::vector<TableRow>& table_rows() {
    using namespace cat_detail;
    static const std::vector<TableRow> rows = [] {
        std::vector<TableRow> r;
        auto fixed = [&](std::string label, int table, int dim, std::vector<Mat3> v) {
            TableRow row;
            row.label = std::move(label);
            row.table = table;
            row.dim = dim;
            row.vectors = [v](const FieldElement&) { return v; };
            row.validate = [](const FieldElement&) -> std::optional<std::string> {
                return std::nullopt;
            };
            r.push_back(std::move(row));
        };
        auto param = [&](std::string label, int table, int dim, std::string note,
                         std::function<std::vector<Mat3>(const FieldElement&)> mk,
                         std::function<std::optional<std::string>(const FieldElement&)> ok) {
            TableRow row;
            row.label = std::move(label);
            row.table = table;
            row.dim = dim;
            row.parametrized = true;
            row.range_note = std::move(note);
            row.vectors = std::move(mk);
            row.validate = std::move(ok);
            r.push_back(std::move(row));
        };

        const FieldElement one = FieldElement::one();

        // Table 1: one-dimensional.
        fixed("u_1_1", 1, 1, {-A(1) - rat(2) * A(2) - A(4) + R2() * A(6) + R2() * A(8)});
        fixed("u_1_2", 1, 1, {A(3) + A(4) + A(7) - A(8)});
        fixed("u_1_3", 1, 1,
              {rat(3) * A(1) + rat(6) * A(2) - rat(5) * A(4) - R2() * A(6) - R2() * A(8)});
        fixed("u_1_4", 1, 1,
              {A(1) + rat(2) * A(2) + rat(7) * A(4) - R2() * A(6) + R2() * A(8)});
        param("u_1_5", 1, 1,
              "lambda real; equivalent members at lambda and lambda/(lambda-1)",
              [](const FieldElement& l) { return std::vector<Mat3>{A(1) + l * A(2)}; },
              real_param);
        fixed("u_1_6", 1, 1, {A(5) - A(7)});
        param("u_1_7", 1, 1, "lambda real nonzero; equivalent members at +/-lambda",
              [](const FieldElement& l) {
                  return std::vector<Mat3>{A(1) - A(2) + l * A(5)};
              },
              [](const FieldElement& l) -> std::optional<std::string> {
                  if (auto e = real_param(l)) return e;
                  if (l.is_zero()) return "lambda must be nonzero";
                  return std::nullopt;
              });

        // Table 2: two-dimensional.
        fixed("u_2_1", 2, 2, {A(3) + A(4) - A(7) + A(8), A(1) + A(2) + A(6)});
        fixed("u_2_2", 2, 2,
              {A(1) + rat(2) * A(2) - A(4) + R2() * A(6) - R2() * A(8),
               A(1) + rat(2) * A(2) + rat(3) * A(4)});
        fixed("u_2_3", 2, 2, {A(1), A(2)});
        // The second Cartan subalgebra.  Recorded here with first vector
        // a_5 - a_7: this is what the catalogued coboundary produces, it is
        // what closes under the bracket, and it matches the occurrences of
        // a_5 - a_7 alongside a_1 + 2a_2 + 3a_4 elsewhere in the catalogue.
        fixed("u_2_4", 2, 2, {A(5) - A(7), A(1) + rat(2) * A(2) + rat(3) * A(4)});
        fixed("u_2_5", 2, 2, {A(3) + A(4) - A(7) + A(8), A(5)});
        param("u_2_6", 2, 2, "lambda real; members at distinct lambda inequivalent",
              [](const FieldElement& l) {
                  return std::vector<Mat3>{
                      A(1) + rat(2) * A(2) - A(4) + R2() * (A(6) - A(8)),
                      u26_second_generator(l)};
              },
              real_param);

        // Table 3: three-dimensional solvable.
        fixed("u_3_1", 3, 3, {A(4) - A(8), A(3) + A(7), A(1) + A(2) - A(6)});
        fixed("u_3_2", 3, 3, {A(3) + A(4) + A(7) - A(8), A(1) + A(2) - A(6), A(5)});
        fixed("u_3_3", 3, 3,
              {rat(4) * A(4) - R2() * A(6) + R2() * A(8), A(5) - A(7),
               A(1) + rat(2) * A(2) + rat(3) * A(4)});

        // Table 4: semisimple.
        fixed("u_3_4", 4, 3, {A(4), A(6), A(7)});
        fixed("u_3_5", 4, 3, {A(1) + A(2), A(5), A(6)});
        fixed("u_3_6", 4, 3, {A(1), A(3), A(4)});

        // Table 5: four- and five-dimensional solvable.
        fixed("u_4_1", 5, 4, {A(1) + A(2) + A(6), A(5), A(3) - A(7), A(4) + A(8)});
        fixed("u_4_2", 5, 4,
              {A(1) - A(2), A(1) + A(2) + A(6), A(3) - A(7), A(4) + A(8)});
        fixed("u_5_1", 5, 5,
              {A(1) - A(2), A(1) + A(2) + A(6), A(5), A(3) - A(7), A(4) + A(8)});

        // Table 6: Levi decomposable.
        fixed("u_4_3", 6, 4, {A(1), A(2), A(5), A(6)});
        fixed("u_4_4", 6, 4, {A(1), A(2), A(3), A(4)});

        // Auxiliary redundant families.
        param("v_1", 0, 1, "lambda real, not in {-1, 1, 2}; reduces to u_1_5",
              [one](const FieldElement& l) {
                  return std::vector<Mat3>{A(1) + rat(2) * A(2) -
                                           (rat(2) * l - one) * A(4)};
              },
              [one](const FieldElement& l) -> std::optional<std::string> {
                  if (auto e = real_param(l)) return e;
                  if (l == -one || l == one || l == FieldElement::from(2))
                      return "lambda must avoid {-1, 1, 2}";
                  return std::nullopt;
              });
        param("v_2", 0, 1, "lambda real, not in {0, 1/2}; reduces to u_1_5",
              [one](const FieldElement& l) {
                  return std::vector<Mat3>{(one - l) * A(1) -
                                           rat(2) * (l - one) * A(2) -
                                           (one + l) * A(4)};
              },
              [](const FieldElement& l) -> std::optional<std::string> {
                  if (auto e = real_param(l)) return e;
                  if (l.is_zero() || l == FieldElement(rat(1, 2)))
                      return "lambda must avoid {0, 1/2}";
                  return std::nullopt;
              });
        param("v_3", 0, 1, "lambda real nonzero; reduces to u_1_7",
              [](const FieldElement& l) {
                  return std::vector<Mat3>{A(1) + rat(1, 2) * A(2) + l * A(8)};
              },
              [](const FieldElement& l) -> std::optional<std::string> {
                  if (auto e = real_param(l)) return e;
                  if (l.is_zero()) return "lambda must be nonzero";
                  return std::nullopt;
              });
        param("v_4", 0, 1, "lambda in (-1,1) nonzero; reduces to u_1_7",
              [](const FieldElement& l) {
                  return std::vector<Mat3>{A(1) + rat(2) * A(2) + rat(3) * A(4) +
                                           l * R2() * (A(5) - A(7))};
              },
              [one](const FieldElement& l) -> std::optional<std::string> {
                  if (auto e = real_param(l)) return e;
                  if (l.is_zero()) return "lambda must be nonzero";
                  FieldElement lo = l + one, hi = one - l;
                  if (lo.real_sign() != Sign::positive || hi.real_sign() != Sign::positive)
                      return "lambda must lie in (-1, 1)";
                  return std::nullopt;
              });
        return r;
    }();
    return rows;
}

inline const TableRow& row_by_label(const std::string& label) {
    for (const auto& r : table_rows())
        if (r.label == label) return r;
    throw error("no such table row: " + label);
}

/// Instance of a table row; throws binding_out_of_range on a parameter
/// outside the recorded range.
inline Subalgebra instantiate_row(const TableRow& row, const FieldElement& lambda) {
    if (row.parametrized) {
        if (auto e = row.validate(lambda))
            throw binding_out_of_range(row.label + ": " + *e);
    }
    std::map<std::string, FieldElement> params;
    std::string label = row.label;
    if (row.parametrized) {
        params["lambda"] = lambda;
        label += "[lambda=" + lambda.str() + "]";
    }
    return make_subalgebra(row.vectors(lambda), Scalars::real, label, params);
}

inline Subalgebra instantiate_row(const std::string& label, const FieldElement& lambda) {
    return instantiate_row(row_by_label(label), lambda);
}

// ---------------------------------------------------------------------------
// Case records
// ---------------------------------------------------------------------------

enum class Disposition { has_real_points, no_real_points, no_transporter };

inline std::string to_string(Disposition d) {
    switch (d) {
        case Disposition::has_real_points: return "has_real_points";
        case Disposition::no_real_points: return "no_real_points";
        case Disposition::no_transporter: return "no_transporter";
    }
    return "?";
}

struct WitnessRecord {
    enum class Role { transporter, cocycle, coboundary, equivalence_conjugator, component_rep };
    Role role;
    std::string name;
    Mat3 matrix;
    std::optional<Mat3> target; // for coboundary solutions: the cocycle solved
    std::string anchor;
};

inline std::string to_string(WitnessRecord::Role r) {
    switch (r) {
        case WitnessRecord::Role::transporter: return "transporter";
        case WitnessRecord::Role::cocycle: return "cocycle";
        case WitnessRecord::Role::coboundary: return "coboundary";
        case WitnessRecord::Role::equivalence_conjugator: return "equivalence_conjugator";
        case WitnessRecord::Role::component_rep: return "component_rep";
    }
    return "?";
}

/// One real orbit representative of a case: a table-row instance together
/// with the conjugator mapping the complex representative onto its
/// complexified span (identity when the representative is already real).
struct RealRepSpec {
    std::string row_label;
    std::function<FieldElement(const Bindings&)> row_param; // null for fixed rows
    std::optional<Mat3> conjugator;                         // nullopt = identity
    std::string anchor;
};

struct FamilyCheckSpec {
    TorusFamily family;
    bool check_tau_action = true; // the tau-action claim is run once per family
    std::string anchor;
};

struct StabCheckSpec {
    std::string name;
    bool expected = true;
    std::function<Mat3(const Bindings&)> element;
    std::string anchor;
};

struct EquivalenceSpec {
    std::string name;
    std::string src_row, dst_row;
    std::function<FieldElement(const Bindings&)> src_param, dst_param;
    std::optional<Mat3> conjugator; // nullopt: found by bounded search
    int search_depth = 3;
    std::string anchor;
};

struct AssertionSpec {
    std::string name;
    std::string detail;
    std::string anchor;
    std::vector<std::pair<std::string, Mat3>> cocycle_reps; // validity-checked
};

struct CaseRecord {
    std::string id;
    std::string summary;
    int complex_table = 0, complex_row = 0; // position in tables 7..12
    int table = 0;                          // real table of the orbits; 0 if none
    Disposition disposition = Disposition::has_real_points;

    std::vector<std::string> param_names;
    std::function<std::optional<std::string>(const Bindings&)> validate; // may be null
    std::vector<Bindings> default_samples; // empty: single run with no bindings

    std::function<Subalgebra(const Bindings&)> complex_rep;
    std::optional<Mat3> transporter;
    std::string transporter_anchor;

    std::vector<WitnessRecord> witnesses;
    std::vector<RealRepSpec> real_reps;
    std::vector<FamilyCheckSpec> families;
    std::vector<StabCheckSpec> stab_checks;
    std::vector<EquivalenceSpec> equivalences;
    std::vector<AssertionSpec> assertions;
    bool run_u26_eigenvalue_checks = false;

    int expected_orbits = 0;
};

namespace cat_detail {

inline Bindings bl(const char* name, FieldElement v) {
    Bindings b;
    b[name] = std::move(v);
    return b;
}

inline Bindings bxy(FieldElement x, FieldElement y) {
    Bindings b;
    b["x"] = std::move(x);
    b["y"] = std::move(y);
    return b;
}

inline FieldElement get(const Bindings& b, const std::string& k) {
    auto it = b.find(k);
    if (it == b.end()) throw binding_out_of_range("missing parameter " + k);
    return it->second;
}

inline std::vector<Bindings> lambda_samples(std::initializer_list<Rational> qs) {
    std::vector<Bindings> out;
    for (const auto& q : qs) out.push_back(bl("lambda", FieldElement(q)));
    return out;
}

} // namespace cat_detail

inline const std::vector<CaseRecord>& load_catalog() {
    using namespace cat_detail;
    using Role = WitnessRecord::Role;
    static const std::vector<CaseRecord> cases = [] {
        std::vector<CaseRecord> cs;
        const FieldElement one = FieldElement::one();
        const FieldElement fi = FieldElement::i();

        auto cx_of = [](std::vector<Mat3> v, std::string label) {
            return make_subalgebra(std::move(v), Scalars::complex, std::move(label));
        };
        auto fixed_complex = [cx_of](std::vector<Mat3> v, std::string label) {
            auto lbl = std::move(label);
            auto vec = std::move(v);
            return [vec, lbl, cx_of](const Bindings&) { return cx_of(vec, lbl); };
        };
        auto fixed_rep = [](std::string row, std::optional<Mat3> conj, std::string anchor) {
            RealRepSpec s;
            s.row_label = std::move(row);
            s.conjugator = std::move(conj);
            s.anchor = std::move(anchor);
            return s;
        };
        auto param_rep = [](std::string row, std::function<FieldElement(const Bindings&)> p,
                            std::optional<Mat3> conj, std::string anchor) {
            RealRepSpec s;
            s.row_label = std::move(row);
            s.row_param = std::move(p);
            s.conjugator = std::move(conj);
            s.anchor = std::move(anchor);
            return s;
        };
        auto wr = [](Role role, std::string name, const Mat3& m,
                     std::optional<Mat3> target, std::string anchor) {
            WitnessRecord w;
            w.role = role;
            w.name = std::move(name);
            w.matrix = m;
            w.target = std::move(target);
            w.anchor = std::move(anchor);
            return w;
        };

        // ------ table 7, row 2: the X_a line -> u_1_1 --------------------
        {
            CaseRecord c;
            c.id = "u_1_1";
            c.summary = "line of X_a";
            c.complex_table = 7;
            c.complex_row = 2;
            c.table = 1;
            c.complex_rep = fixed_complex({C(cXa)}, "Xa");
            c.transporter = wit::rot12();
            c.transporter_anchor = "witness:u_1_1:transporter";
            c.witnesses = {
                wr(Role::cocycle, "negswap12", wit::negswap12(), std::nullopt,
                   "witness:u_1_1:cocycle"),
                wr(Role::coboundary, "mix12", wit::mix12(), wit::negswap12(),
                   "witness:u_1_1:coboundary"),
            };
            c.real_reps = {fixed_rep("u_1_1", wit::mix12(), "table1:u_1_1")};
            c.families = {{wit::fam_u11(), true, "family:u_1_1"}};
            c.stab_checks = {
                {"upper_triangular_sample", true,
                 [](const Bindings&) {
                     return Mat3::diag(FieldElement::from(2), FieldElement::one(),
                                       FieldElement(rat(1, 2)));
                 },
                 "stabilizer:u_1_1:diagonal"},
                {"transporter_not_in_stabilizer", false,
                 [](const Bindings&) { return wit::rot12(); },
                 "stabilizer:u_1_1:negative"},
            };
            c.expected_orbits = 1;
            cs.push_back(std::move(c));
        }

        // ------ table 7, row 1: the X_a + X_b line -> u_1_2 ---------------
        {
            CaseRecord c;
            c.id = "u_1_2";
            c.summary = "line of X_a + X_b";
            c.complex_table = 7;
            c.complex_row = 1;
            c.table = 1;
            c.complex_rep = fixed_complex({C(cXa) + C(cXb)}, "Xa+Xb");
            c.transporter = wit::cyc13_inv(); // inverse of the recorded cocycle
            c.transporter_anchor = "witness:u_1_2:transporter";
            c.witnesses = {
                wr(Role::cocycle, "cyc13", wit::cyc13(), std::nullopt,
                   "witness:u_1_2:cocycle"),
                wr(Role::coboundary, "mix13", wit::mix13(), wit::cyc13(),
                   "witness:u_1_2:coboundary"),
            };
            c.real_reps = {fixed_rep("u_1_2", wit::mix13(), "table1:u_1_2")};
            c.families = {{wit::fam_u12(), true, "family:u_1_2"}};
            c.expected_orbits = 1; // order-3 component group contributes trivially
            cs.push_back(std::move(c));
        }

        // ------ table 7, row 3: X_a + H_a + 2H_b -> u_1_3, u_1_4 ----------
        {
            CaseRecord c;
            c.id = "u_1_3_u_1_4";
            c.summary = "line of X_a + H_a + 2H_b";
            c.complex_table = 7;
            c.complex_row = 3;
            c.table = 1;
            c.complex_rep = fixed_complex({C(cXa) + C(cHa) + rat(2) * C(cHb)},
                                          "Xa+Ha+2Hb");
            c.transporter = wit::negswap12();
            c.transporter_anchor = "witness:u_1_3:transporter";
            c.witnesses = {
                wr(Role::cocycle, "negswap12", wit::negswap12(), std::nullopt,
                   "witness:u_1_3:cocycle"),
                wr(Role::coboundary, "mix12", wit::mix12(), wit::negswap12(),
                   "witness:u_1_3:coboundary"),
            };
            c.real_reps = {
                fixed_rep("u_1_3", wit::mix12(), "table1:u_1_3"),
                // Second orbit: twisting by S(-1) = negswap12 conjugates by
                // mix12 once more.
                fixed_rep("u_1_4", wit::mix12() * wit::mix12(), "table1:u_1_4"),
            };
            c.families = {{wit::fam_u13(), true, "family:u_1_3"}};
            c.expected_orbits = 2;
            cs.push_back(std::move(c));
        }

        // ------ table 7, row 4 at generic real lambda ---------------------
        {
            CaseRecord c;
            c.id = "u_1_5_generic";
            c.summary = "diagonal line H_a + lambda H_b, lambda real generic";
            c.complex_table = 7;
            c.complex_row = 4;
            c.table = 1;
            c.param_names = {"lambda"};
            c.validate = [one](const Bindings& b) -> std::optional<std::string> {
                FieldElement l = get(b, "lambda");
                if (!l.is_real()) return "lambda must be real";
                for (long x : {0L, 1L, -1L, 2L})
                    if (l == FieldElement::from(x)) return "lambda must be generic";
                if (l == FieldElement(rat(1, 2))) return "lambda must be generic";
                return std::nullopt;
            };
            c.default_samples =
                lambda_samples({rat(-3), rat(-1, 2), rat(1, 3), rat(5, 2), rat(7, 2)});
            c.complex_rep = [&](const Bindings& b) {
                FieldElement l = get(b, "lambda");
                return make_subalgebra({C(cHa) + l * C(cHb)}, Scalars::complex,
                                       "H[lambda=" + l.str() + "]");
            };
            c.transporter = Mat3::identity(); // already conjugation-stable
            c.transporter_anchor = "witness:u_1_5:transporter";
            c.witnesses = {
                wr(Role::cocycle, "diag_m1m", wit::diag_m1m(), std::nullopt,
                   "witness:u_1_5:cocycle:T(-1,1)"),
                wr(Role::cocycle, "diag_1mm", wit::diag_1mm(), std::nullopt,
                   "witness:u_1_5:cocycle:T(1,-1)"),
                wr(Role::coboundary, "col3_rot", wit::col3_rot(), wit::diag_m1m(),
                   "witness:u_1_5:coboundary:T(-1,1)"),
                wr(Role::coboundary, "col2_rot", wit::col2_rot(), wit::diag_1mm(),
                   "witness:u_1_5:coboundary:T(1,-1)"),
            };
            c.real_reps = {
                param_rep("u_1_5", [](const Bindings& b) { return get(b, "lambda"); },
                          std::nullopt, "table1:u_1_5"),
                param_rep("v_1", [](const Bindings& b) { return get(b, "lambda"); },
                          wit::col3_rot(), "aux:v_1"),
                param_rep("v_2", [](const Bindings& b) { return get(b, "lambda"); },
                          wit::col2_rot(), "aux:v_2"),
            };
            c.stab_checks = {
                {"diagonal_torus_sample", true,
                 [](const Bindings&) {
                     return wit::diag_t(FieldElement::from(2), FieldElement::from(3));
                 },
                 "stabilizer:u_1_5:diagonal"},
            };
            c.equivalences = {
                {"u_1_5~v_1", "u_1_5", "v_1",
                 [](const Bindings& b) { return get(b, "lambda"); },
                 [one](const Bindings& b) {
                     FieldElement l = get(b, "lambda");
                     return (l - one) / l;
                 },
                 std::nullopt, 3, "equiv:u_1_5:v_1"},
                {"u_1_5~v_2", "u_1_5", "v_2",
                 [](const Bindings& b) { return get(b, "lambda"); },
                 [one](const Bindings& b) {
                     FieldElement l = get(b, "lambda");
                     return -(l - one).inverse();
                 },
                 std::nullopt, 3, "equiv:u_1_5:v_2"},
                {"u_1_5~u_1_5", "u_1_5", "u_1_5",
                 [](const Bindings& b) { return get(b, "lambda"); },
                 [one](const Bindings& b) {
                     FieldElement l = get(b, "lambda");
                     return l / (l - one);
                 },
                 std::nullopt, 2, "equiv:u_1_5:involution"},
            };
            c.expected_orbits = 3;
            cs.push_back(std::move(c));
        }

        // ------ table 7, row 4 at lambda = 0 ------------------------------
        {
            CaseRecord c;
            c.id = "u_1_5_at_0";
            c.summary = "diagonal line H_a (lambda = 0; component group of order 2)";
            c.complex_table = 7;
            c.complex_row = 4;
            c.table = 1;
            c.complex_rep = fixed_complex({C(cHa)}, "H[lambda=0]");
            c.transporter = Mat3::identity();
            c.transporter_anchor = "witness:u_1_5_at_0:transporter";
            c.witnesses = {
                wr(Role::cocycle, "diag_m1m", wit::diag_m1m(), std::nullopt,
                   "witness:u_1_5_at_0:cocycle:T(-1,1)"),
                wr(Role::coboundary, "col3_rot", wit::col3_rot(), wit::diag_m1m(),
                   "witness:u_1_5_at_0:coboundary:T(-1,1)"),
                wr(Role::component_rep, "swap12_neg3", wit::swap12_neg3(), std::nullopt,
                   "witness:u_1_5_at_0:component"),
                wr(Role::coboundary, "mix123", wit::mix123(), wit::swap12_neg3(),
                   "witness:u_1_5_at_0:coboundary:component"),
            };
            c.real_reps = {
                param_rep("u_1_5", [](const Bindings&) { return FieldElement::zero(); },
                          std::nullopt, "table1:u_1_5@0"),
                param_rep("v_1", [](const Bindings&) { return FieldElement::zero(); },
                          wit::col3_rot(), "aux:v_1@0"),
                fixed_rep("u_1_6", wit::mix123(), "table1:u_1_6"),
            };
            c.stab_checks = {
                {"component_rep_stabilizes", true,
                 [](const Bindings&) { return wit::swap12_neg3(); },
                 "stabilizer:u_1_5_at_0:component"},
            };
            c.assertions = {
                {"jstar_fiber",
                 "fiber of the component projection over the trivial class taken "
                 "as {T(1,1), T(-1,1), T(-1,-1)}; only cocycle validity of the "
                 "listed representatives is machine-checked",
                 "assert:u_1_5_at_0:jstar_fiber",
                 {{"T(1,1)", Mat3::identity()},
                  {"T(-1,1)", wit::diag_m1m()},
                  {"T(-1,-1)", wit::diag_mm1()}}},
            };
            c.expected_orbits = 3;
            cs.push_back(std::move(c));
        }

        // ------ table 7, row 4 at lambda = 2 ------------------------------
        {
            CaseRecord c;
            c.id = "u_1_5_at_2";
            c.summary = "diagonal line H_a + 2H_b (stabilizer isomorphic to GL2)";
            c.complex_table = 7;
            c.complex_row = 4;
            c.table = 1;
            c.complex_rep = fixed_complex({C(cHa) + rat(2) * C(cHb)}, "H[lambda=2]");
            c.transporter = Mat3::identity();
            c.transporter_anchor = "witness:u_1_5_at_2:transporter";
            c.witnesses = {
                wr(Role::cocycle, "diag_1mm", wit::diag_1mm(), std::nullopt,
                   "witness:u_1_5_at_2:cocycle:T(1,-1)"),
                wr(Role::coboundary, "col2_rot", wit::col2_rot(), wit::diag_1mm(),
                   "witness:u_1_5_at_2:coboundary:T(1,-1)"),
            };
            c.real_reps = {
                param_rep("u_1_5", [](const Bindings&) { return FieldElement::from(2); },
                          std::nullopt, "table1:u_1_5@2"),
                param_rep("v_2", [](const Bindings&) { return FieldElement::from(2); },
                          wit::col2_rot(), "aux:v_2@2"),
            };
            c.assertions = {
                {"gl2_class_list",
                 "cohomology classes of the GL2-isomorphic stabilizer taken as "
                 "{T(1,1), T(1,-1), T(-1,-1)}; only cocycle validity of the listed "
                 "representatives is machine-checked",
                 "assert:u_1_5_at_2:gl2_classes",
                 {{"T(1,1)", Mat3::identity()},
                  {"T(1,-1)", wit::diag_1mm()},
                  {"T(-1,-1)", wit::diag_mm1()}}},
            };
            c.expected_orbits = 2;
            cs.push_back(std::move(c));
        }

        // ------ table 7, row 4 on the unit circle -> u_1_7 ----------------
        {
            CaseRecord c;
            c.id = "u_1_7_circle";
            c.summary = "diagonal line H_a + lambda H_b, |lambda| = 1, lambda not real";
            c.complex_table = 7;
            c.complex_row = 4;
            c.table = 1;
            c.param_names = {"x", "y"};
            c.validate = [one](const Bindings& b) -> std::optional<std::string> {
                FieldElement x = get(b, "x"), y = get(b, "y");
                if (!x.is_real() || !y.is_real()) return "x, y must be real";
                if (y.is_zero()) return "y must be nonzero";
                if (!(x * x + y * y == one)) return "need x^2 + y^2 = 1";
                return std::nullopt;
            };
            c.default_samples = {
                bxy(FieldElement(rat(3, 5)), FieldElement(rat(4, 5))),
                bxy(FieldElement(rat(-3, 5)), FieldElement(rat(4, 5))),
                bxy(FieldElement(rat(5, 13)), FieldElement(rat(-12, 13))),
                bxy(FieldElement(rat(-4, 5)), FieldElement(rat(-3, 5))),
                bxy(FieldElement(rat(8, 17)), FieldElement(rat(15, 17))),
            };
            c.complex_rep = [fi](const Bindings& b) {
                FieldElement l = get(b, "x") + fi * get(b, "y");
                return make_subalgebra({C(cHa) + l * C(cHb)}, Scalars::complex,
                                       "H[lambda=" + l.str() + "]");
            };
            c.transporter = wit::cyc13();
            c.transporter_anchor = "witness:u_1_7:transporter";
            c.witnesses = {
                wr(Role::cocycle, "cyc13", wit::cyc13(), std::nullopt,
                   "witness:u_1_7:cocycle"),
                wr(Role::coboundary, "mix13", wit::mix13(), wit::cyc13(),
                   "witness:u_1_7:coboundary"),
            };
            auto u17_param = [one](const Bindings& b) {
                return get(b, "y") / (get(b, "x") - one);
            };
            c.real_reps = {param_rep("u_1_7", u17_param, wit::mix13(), "table1:u_1_7")};
            c.families = {{wit::fam_u17(), true, "family:u_1_7"}};
            c.equivalences = {
                {"u_1_7~v_3", "u_1_7", "v_3", u17_param,
                 [u17_param](const Bindings& b) {
                     return rat(1, 2) * u17_param(b);
                 },
                 std::nullopt, 2, "equiv:u_1_7:v_3"},
                {"u_1_7~u_1_7_neg", "u_1_7", "u_1_7", u17_param,
                 [u17_param](const Bindings& b) { return -u17_param(b); },
                 std::nullopt, 1, "equiv:u_1_7:sign"},
            };
            c.expected_orbits = 1;
            cs.push_back(std::move(c));
        }

        // ------ table 7, row 4 on the line Re lambda = 1/2 -> v_3 ---------
        {
            CaseRecord c;
            c.id = "v_3_line";
            c.summary = "diagonal line H_a + lambda H_b, lambda = 1/2 + iy";
            c.complex_table = 7;
            c.complex_row = 4;
            c.table = 1;
            c.param_names = {"y"};
            c.validate = [](const Bindings& b) -> std::optional<std::string> {
                FieldElement y = get(b, "y");
                if (!y.is_real()) return "y must be real";
                if (y.is_zero()) return "y must be nonzero";
                return std::nullopt;
            };
            c.default_samples = [] {
                std::vector<Bindings> out;
                for (const auto& q :
                     {rat(-3), rat(-1, 2), rat(1, 3), rat(1), rat(5, 2)})
                    out.push_back(bl("y", FieldElement(q)));
                return out;
            }();
            c.complex_rep = [fi](const Bindings& b) {
                FieldElement l = FieldElement(rat(1, 2)) + fi * get(b, "y");
                return make_subalgebra({C(cHa) + l * C(cHb)}, Scalars::complex,
                                       "H[lambda=" + l.str() + "]");
            };
            c.transporter = wit::swap23_i();
            c.transporter_anchor = "witness:v_3:transporter";
            c.witnesses = {
                wr(Role::cocycle, "swap23_i", wit::swap23_i(), std::nullopt,
                   "witness:v_3:cocycle"),
                wr(Role::coboundary, "mix23", wit::mix23(), wit::swap23_i(),
                   "witness:v_3:coboundary"),
            };
            // The recorded coboundary sends H(1/2 + iy) to the span of
            // a_1 + a_2/2 - y a_8, i.e. the row v_3 at parameter -y.
            c.real_reps = {param_rep(
                "v_3", [](const Bindings& b) { return -get(b, "y"); }, wit::mix23(),
                "aux:v_3")};
            c.families = {{wit::fam_v3(), true, "family:v_3"}};
            c.expected_orbits = 1;
            cs.push_back(std::move(c));
        }

        // ------ table 7, row 4 on the shifted circle -> v_4 ---------------
        {
            CaseRecord c;
            c.id = "v_4_circle";
            c.summary = "diagonal line H_a + lambda H_b, lambda on x^2 - 2x + y^2 = 0";
            c.complex_table = 7;
            c.complex_row = 4;
            c.table = 1;
            c.param_names = {"x", "y"};
            c.validate = [](const Bindings& b) -> std::optional<std::string> {
                FieldElement x = get(b, "x"), y = get(b, "y");
                if (!x.is_real() || !y.is_real()) return "x, y must be real";
                if (y.is_zero()) return "y must be nonzero";
                if (!((x * x - rat(2) * x + y * y).is_zero()))
                    return "need x^2 - 2x + y^2 = 0";
                return std::nullopt;
            };
            c.default_samples = {
                bxy(FieldElement(rat(8, 5)), FieldElement(rat(4, 5))),
                bxy(FieldElement(rat(8, 5)), FieldElement(rat(-4, 5))),
                bxy(FieldElement(rat(9, 5)), FieldElement(rat(3, 5))),
                bxy(FieldElement(rat(9, 5)), FieldElement(rat(-3, 5))),
                bxy(FieldElement(rat(32, 25)), FieldElement(rat(24, 25))),
            };
            c.complex_rep = [fi](const Bindings& b) {
                FieldElement l = get(b, "x") + fi * get(b, "y");
                return make_subalgebra({C(cHa) + l * C(cHb)}, Scalars::complex,
                                       "H[lambda=" + l.str() + "]");
            };
            c.transporter = wit::swap12_neg3();
            c.transporter_anchor = "witness:v_4:transporter";
            c.witnesses = {
                wr(Role::cocycle, "swap12_neg3", wit::swap12_neg3(), std::nullopt,
                   "witness:v_4:cocycle"),
                wr(Role::coboundary, "mix123", wit::mix123(), wit::swap12_neg3(),
                   "witness:v_4:coboundary"),
            };
            auto v4_param = [](const Bindings& b) { return get(b, "y") / get(b, "x"); };
            c.real_reps = {param_rep("v_4", v4_param, wit::mix123(), "aux:v_4")};
            c.families = {{wit::fam_v4(), true, "family:v_4"}};
            c.equivalences = {
                {"v_4~u_1_7", "v_4", "u_1_7", v4_param, v4_param, wit::rot45_neg3(),
                 0, "equiv:v_4:u_1_7"},
            };
            c.expected_orbits = 1;
            cs.push_back(std::move(c));
        }

        // ------ table 8, row 1 -> u_2_1 ------------------------------------
        {
            CaseRecord c;
            c.id = "u_2_1";
            c.summary = "plane of X_a + X_b and X_ab";
            c.complex_table = 8;
            c.complex_row = 1;
            c.table = 2;
            c.complex_rep = fixed_complex({C(cXa) + C(cXb), C(cXab)}, "Xa+Xb,Xab");
            c.transporter = wit::cyc13_inv();
            c.transporter_anchor = "witness:u_2_1:transporter";
            c.witnesses = {
                wr(Role::cocycle, "cyc13_inv", wit::cyc13_inv(), std::nullopt,
                   "witness:u_2_1:cocycle"),
                wr(Role::coboundary, "mix13_b", wit::mix13_b(), wit::cyc13_inv(),
                   "witness:u_2_1:coboundary"),
            };
            c.real_reps = {fixed_rep("u_2_1", wit::mix13_b(), "table2:u_2_1")};
            c.families = {{wit::fam_u21(), true, "family:u_2_1"}};
            c.expected_orbits = 1;
            cs.push_back(std::move(c));
        }

        // ------ table 8, row 2 -> u_2_2 ------------------------------------
        {
            CaseRecord c;
            c.id = "u_2_2";
            c.summary = "plane of X_a and H_a + 2H_b";
            c.complex_table = 8;
            c.complex_row = 2;
            c.table = 2;
            c.complex_rep = fixed_complex({C(cXa), C(cHa) + rat(2) * C(cHb)},
                                          "Xa,Ha+2Hb");
            c.transporter = wit::swap12_neg3();
            c.transporter_anchor = "witness:u_2_2:transporter";
            c.witnesses = {
                wr(Role::cocycle, "swap12_neg3", wit::swap12_neg3(), std::nullopt,
                   "witness:u_2_2:cocycle"),
                wr(Role::coboundary, "mix123", wit::mix123(), wit::swap12_neg3(),
                   "witness:u_2_2:coboundary"),
            };
            c.real_reps = {fixed_rep("u_2_2", wit::mix123(), "table2:u_2_2")};
            c.families = {{wit::fam_u22(), true, "family:u_2_2"}};
            c.expected_orbits = 1;
            cs.push_back(std::move(c));
        }

        // ------ table 8, row 5: the diagonal Cartan -> u_2_3, u_2_4 --------
        {
            CaseRecord c;
            c.id = "u_2_3_u_2_4";
            c.summary = "diagonal Cartan subalgebra";
            c.complex_table = 8;
            c.complex_row = 5;
            c.table = 2;
            c.complex_rep = fixed_complex({C(cHa), C(cHb)}, "Ha,Hb");
            c.transporter = Mat3::identity();
            c.transporter_anchor = "witness:u_2_3:transporter";
            c.witnesses = {
                wr(Role::component_rep, "swap12_neg3", wit::swap12_neg3(), std::nullopt,
                   "witness:u_2_3:component"),
                wr(Role::coboundary, "mix123", wit::mix123(), wit::swap12_neg3(),
                   "witness:u_2_3:coboundary"),
            };
            c.real_reps = {
                fixed_rep("u_2_3", std::nullopt, "table2:u_2_3"),
                fixed_rep("u_2_4", wit::mix123(), "table2:u_2_4"),
            };
            c.expected_orbits = 2;
            cs.push_back(std::move(c));
        }

        // ------ table 8, row 6 -> u_2_5 ------------------------------------
        {
            CaseRecord c;
            c.id = "u_2_5";
            c.summary = "plane of X_a + X_b and H_a + H_b";
            c.complex_table = 8;
            c.complex_row = 6;
            c.table = 2;
            c.complex_rep = fixed_complex({C(cXa) + C(cXb), C(cHa) + C(cHb)},
                                          "Xa+Xb,Ha+Hb");
            c.transporter = wit::cyc13_inv();
            c.transporter_anchor = "witness:u_2_5:transporter";
            c.witnesses = {
                wr(Role::cocycle, "cyc13_inv", wit::cyc13_inv(), std::nullopt,
                   "witness:u_2_5:cocycle"),
                wr(Role::coboundary, "mix13_b", wit::mix13_b(), wit::cyc13_inv(),
                   "witness:u_2_5:coboundary"),
            };
            c.real_reps = {fixed_rep("u_2_5", wit::mix13_b(), "table2:u_2_5")};
            c.families = {{wit::fam_u21(), false, "family:u_2_5"}};
            c.expected_orbits = 1;
            cs.push_back(std::move(c));
        }

        // ------ table 8, row 9 -> u_2_6 ------------------------------------
        {
            CaseRecord c;
            c.id = "u_2_6";
            c.summary = "plane of X_a and lambda H_a + (2 lambda + 1) H_b on the "
                        "line Re lambda = -1/2";
            c.complex_table = 8;
            c.complex_row = 9;
            c.table = 2;
            c.param_names = {"y"};
            c.validate = [](const Bindings& b) -> std::optional<std::string> {
                if (!get(b, "y").is_real()) return "y must be real";
                return std::nullopt;
            };
            c.default_samples = [] {
                std::vector<Bindings> out;
                for (const auto& q :
                     {rat(-3), rat(-1, 2), rat(1, 3), rat(1), rat(5, 2)})
                    out.push_back(bl("y", FieldElement(q)));
                return out;
            }();
            c.complex_rep = [one, fi](const Bindings& b) {
                FieldElement l = FieldElement(rat(-1, 2)) + fi * get(b, "y");
                return make_subalgebra(
                    {C(cXa), l * C(cHa) + (rat(2) * l + one) * C(cHb)},
                    Scalars::complex, "Xa,H[lambda=" + l.str() + "]");
            };
            c.transporter = wit::swap12_neg3();
            c.transporter_anchor = "witness:u_2_6:transporter";
            c.witnesses = {
                wr(Role::cocycle, "swap12_neg3", wit::swap12_neg3(), std::nullopt,
                   "witness:u_2_6:cocycle"),
                wr(Role::coboundary, "mix123", wit::mix123(), wit::swap12_neg3(),
                   "witness:u_2_6:coboundary"),
            };
            c.real_reps = {param_rep(
                "u_2_6", [](const Bindings& b) { return get(b, "y"); }, wit::mix123(),
                "table2:u_2_6")};
            c.families = {{wit::fam_v4(), false, "family:u_2_6"}};
            c.run_u26_eigenvalue_checks = true;
            c.assertions = {
                {"u26_sign_separation",
                 "inequivalence of the members at lambda and -lambda rests on an "
                 "uncertified direct computation; only the +/-lambda necessary "
                 "condition is machine-checked",
                 "assert:u_2_6:sign_separation",
                 {}},
            };
            c.expected_orbits = 1;
            cs.push_back(std::move(c));
        }

        // ------ table 9 -> u_3_4 and u_3_5/u_3_6 ---------------------------
        {
            CaseRecord c;
            c.id = "u_3_5_u_3_6";
            c.summary = "semisimple su(2)-type triple (X_ab, Y_ab, H_a + H_b)";
            c.complex_table = 9;
            c.complex_row = 1;
            c.table = 4;
            c.complex_rep = fixed_complex({C(cXab), C(cYab), C(cHa) + C(cHb)},
                                          "Xab,Yab,Ha+Hb");
            c.transporter = Mat3::identity();
            c.transporter_anchor = "witness:u_3_5:transporter";
            c.witnesses = {
                wr(Role::cocycle, "diag_1mm", wit::diag_1mm(), std::nullopt,
                   "witness:u_3_5:cocycle"),
                wr(Role::coboundary, "col2_rot", wit::col2_rot(), wit::diag_1mm(),
                   "witness:u_3_5:coboundary"),
            };
            c.real_reps = {
                fixed_rep("u_3_5", std::nullopt, "table4:u_3_5"),
                fixed_rep("u_3_6", wit::col2_rot(), "table4:u_3_6"),
            };
            c.expected_orbits = 2;
            cs.push_back(std::move(c));
        }
        {
            CaseRecord c;
            c.id = "u_3_4";
            c.summary = "semisimple principal triple (X_a + X_b, 2Y_a + 2Y_b, "
                        "2H_a + 2H_b)";
            c.complex_table = 9;
            c.complex_row = 2;
            c.table = 4;
            c.complex_rep = fixed_complex(
                {C(cXa) + C(cXb), rat(2) * C(cYa) + rat(2) * C(cYb),
                 rat(2) * C(cHa) + rat(2) * C(cHb)},
                "principal sl2");
            c.transporter = wit::diag_1mm();
            c.transporter_anchor = "witness:u_3_4:transporter";
            c.witnesses = {
                wr(Role::cocycle, "diag_1mm", wit::diag_1mm(), std::nullopt,
                   "witness:u_3_4:cocycle"),
                wr(Role::coboundary, "col2_rot", wit::col2_rot(), wit::diag_1mm(),
                   "witness:u_3_4:coboundary"),
            };
            c.real_reps = {fixed_rep("u_3_4", wit::col2_rot(), "table4:u_3_4")};
            c.expected_orbits = 1;
            cs.push_back(std::move(c));
        }

        // ------ table 10 rows with real points ------------------------------
        {
            CaseRecord c;
            c.id = "u_3_1";
            c.summary = "full upper-triangular nilpotent triple";
            c.complex_table = 10;
            c.complex_row = 11;
            c.table = 3;
            c.complex_rep = fixed_complex({C(cXa), C(cXb), C(cXab)}, "Xa,Xb,Xab");
            c.transporter = wit::cyc13();
            c.transporter_anchor = "witness:u_3_1:transporter";
            c.witnesses = {
                wr(Role::cocycle, "cyc13", wit::cyc13(), std::nullopt,
                   "witness:u_3_1:cocycle"),
                wr(Role::coboundary, "mix13", wit::mix13(), wit::cyc13(),
                   "witness:u_3_1:coboundary"),
            };
            c.real_reps = {fixed_rep("u_3_1", wit::mix13(), "table3:u_3_1")};
            c.families = {{wit::fam_u17(), false, "family:u_3_1"}};
            c.expected_orbits = 1;
            cs.push_back(std::move(c));
        }
        {
            CaseRecord c;
            c.id = "u_3_2";
            c.summary = "solvable triple (X_a + X_b, X_ab, H_a + H_b)";
            c.complex_table = 10;
            c.complex_row = 5;
            c.table = 3;
            c.complex_rep = fixed_complex({C(cXa) + C(cXb), C(cXab), C(cHa) + C(cHb)},
                                          "Xa+Xb,Xab,Ha+Hb");
            c.transporter = wit::cyc13();
            c.transporter_anchor = "witness:u_3_2:transporter";
            c.witnesses = {
                wr(Role::cocycle, "cyc13", wit::cyc13(), std::nullopt,
                   "witness:u_3_2:cocycle"),
                wr(Role::coboundary, "mix13", wit::mix13(), wit::cyc13(),
                   "witness:u_3_2:coboundary"),
            };
            c.real_reps = {fixed_rep("u_3_2", wit::mix13(), "table3:u_3_2")};
            c.families = {{wit::fam_u12(), false, "family:u_3_2"}};
            c.expected_orbits = 1;
            cs.push_back(std::move(c));
        }
        {
            CaseRecord c;
            c.id = "u_3_3";
            c.summary = "Borel-type triple (X_a, H_a, H_b)";
            c.complex_table = 10;
            c.complex_row = 6;
            c.table = 3;
            c.complex_rep = fixed_complex({C(cXa), C(cHa), C(cHb)}, "Xa,Ha,Hb");
            c.transporter = wit::swap12_neg3();
            c.transporter_anchor = "witness:u_3_3:transporter";
            c.witnesses = {
                wr(Role::cocycle, "swap12_neg3", wit::swap12_neg3(), std::nullopt,
                   "witness:u_3_3:cocycle"),
                wr(Role::coboundary, "mix123", wit::mix123(), wit::swap12_neg3(),
                   "witness:u_3_3:coboundary"),
            };
            c.real_reps = {fixed_rep("u_3_3", wit::mix123(), "table3:u_3_3")};
            c.families = {{wit::fam_v4(), false, "family:u_3_3"}};
            c.expected_orbits = 1;
            cs.push_back(std::move(c));
        }

        // ------ table 11 rows with real points ------------------------------
        auto upper4 = [&](std::string id, int row, Mat3 cartan_part,
                          std::string row_label) {
            CaseRecord c;
            c.id = std::move(id);
            c.summary = "solvable span of the full upper triangle and a diagonal";
            c.complex_table = 11;
            c.complex_row = row;
            c.table = 5;
            std::vector<Mat3> gens = {C(cXa), C(cXb), C(cXab), cartan_part};
            c.complex_rep = fixed_complex(gens, "upper+diag");
            c.transporter = wit::cyc13_inv();
            c.transporter_anchor = "witness:" + c.id + ":transporter";
            c.witnesses = {
                wr(Role::cocycle, "cyc13_inv", wit::cyc13_inv(), std::nullopt,
                   "witness:" + c.id + ":cocycle"),
                wr(Role::coboundary, "mix13_b", wit::mix13_b(), wit::cyc13_inv(),
                   "witness:" + c.id + ":coboundary"),
            };
            c.real_reps = {fixed_rep(row_label, wit::mix13_b(), "table5:" + row_label)};
            c.families = {{wit::fam_u41(), c.id == "u_4_1", "family:" + c.id}};
            c.expected_orbits = 1;
            return c;
        };
        cs.push_back(upper4("u_4_1", 3, C(cHa) + C(cHb), "u_4_1"));
        cs.push_back(upper4("u_4_2", 6, C(cHa) - C(cHb), "u_4_2"));
        {
            CaseRecord c;
            c.id = "u_5_1";
            c.summary = "full Borel subalgebra (upper triangle plus Cartan)";
            c.complex_table = 11;
            c.complex_row = 7;
            c.table = 5;
            c.complex_rep = fixed_complex({C(cXa), C(cXb), C(cXab), C(cHa), C(cHb)},
                                          "borel");
            c.transporter = wit::cyc13_inv();
            c.transporter_anchor = "witness:u_5_1:transporter";
            c.witnesses = {
                wr(Role::cocycle, "cyc13_inv", wit::cyc13_inv(), std::nullopt,
                   "witness:u_5_1:cocycle"),
                wr(Role::coboundary, "mix13_b", wit::mix13_b(), wit::cyc13_inv(),
                   "witness:u_5_1:coboundary"),
            };
            c.real_reps = {fixed_rep("u_5_1", wit::mix13_b(), "table5:u_5_1")};
            c.families = {{wit::fam_u41(), false, "family:u_5_1"}};
            c.expected_orbits = 1;
            cs.push_back(std::move(c));
        }

        // ------ table 12, row 1 -> u_4_3, u_4_4 -----------------------------
        {
            CaseRecord c;
            c.id = "u_4_3_u_4_4";
            c.summary = "Levi decomposable span (X_ab, Y_ab, H_a, H_b)";
            c.complex_table = 12;
            c.complex_row = 1;
            c.table = 6;
            c.complex_rep = fixed_complex({C(cXab), C(cYab), C(cHa), C(cHb)},
                                          "Xab,Yab,Ha,Hb");
            c.transporter = Mat3::identity();
            c.transporter_anchor = "witness:u_4_3:transporter";
            c.witnesses = {
                wr(Role::cocycle, "diag_1mm", wit::diag_1mm(), std::nullopt,
                   "witness:u_4_3:cocycle"),
                wr(Role::coboundary, "col2_rot", wit::col2_rot(), wit::diag_1mm(),
                   "witness:u_4_3:coboundary"),
            };
            c.real_reps = {
                fixed_rep("u_4_3", std::nullopt, "table6:u_4_3"),
                fixed_rep("u_4_4", wit::col2_rot(), "table6:u_4_4"),
            };
            c.expected_orbits = 2;
            cs.push_back(std::move(c));
        }

        // ------ discarded cases (no transporter exists) ---------------------
        auto discard = [&](std::string id, int table, int row, std::string summary,
                           std::vector<Mat3> gens, bool groebner) {
            CaseRecord c;
            c.id = std::move(id);
            c.summary = std::move(summary);
            c.complex_table = table;
            c.complex_row = row;
            c.table = 0;
            c.disposition = Disposition::no_transporter;
            c.complex_rep = fixed_complex(std::move(gens), "discarded");
            c.assertions = {
                {"nonexistence",
                 std::string(groebner
                                 ? "nonexistence of a transporter rests on a Groebner "
                                   "basis computation"
                                 : "nonexistence of a transporter is recorded without "
                                   "a finite certificate") +
                     "; the orbit is excluded from the classification",
                 "assert:" + c.id + ":nonexistence",
                 {}},
            };
            c.expected_orbits = 0;
            return c;
        };
        cs.push_back(discard("disc_t8_r3", 8, 3, "plane of X_a and X_ab",
                             {C(cXa), C(cXab)}, true));
        cs.push_back(discard("disc_t8_r4", 8, 4, "plane of X_a and Y_b",
                             {C(cXa), C(cYb)}, false));
        cs.push_back(discard("disc_t8_r7", 8, 7,
                             "plane of X_a and -H_a + H_b + 3X_ab",
                             {C(cXa), -C(cHa) + C(cHb) + rat(3) * C(cXab)}, false));
        cs.push_back(discard("disc_t8_r8", 8, 8,
                             "plane of X_a and -2H_a - H_b + 3Y_b",
                             {C(cXa), rat(-2) * C(cHa) - C(cHb) + rat(3) * C(cYb)},
                             false));
        cs.push_back(discard("disc_t10_r1", 10, 1, "triple (X_a, X_ab, 2H_a + H_b)",
                             {C(cXa), C(cXab), rat(2) * C(cHa) + C(cHb)}, false));
        cs.push_back(discard("disc_t10_r2", 10, 2, "triple (X_a, Y_b, H_a - H_b)",
                             {C(cXa), C(cYb), C(cHa) - C(cHb)}, false));
        cs.push_back(discard("disc_t10_r3", 10, 3,
                             "triple (X_a, X_ab, 2H_a + H_b + X_b)",
                             {C(cXa), C(cXab), rat(2) * C(cHa) + C(cHb) + C(cXb)},
                             false));
        cs.push_back(discard("disc_t10_r4", 10, 4,
                             "triple (Y_a, Y_ab, 2H_a + H_b + X_b)",
                             {C(cYa), C(cYab), rat(2) * C(cHa) + C(cHb) + C(cXb)},
                             false));
        cs.push_back(discard("disc_t10_r9", 10, 9, "triple (X_a, X_ab, H_b)",
                             {C(cXa), C(cXab), C(cHb)}, false));
        cs.push_back(discard("disc_t10_r10", 10, 10, "triple (X_a, Y_b, H_a + H_b)",
                             {C(cXa), C(cYb), C(cHa) + C(cHb)}, false));
        cs.push_back(discard("disc_t11_r1", 11, 1, "span (X_a, X_ab, H_a, H_b)",
                             {C(cXa), C(cXab), C(cHa), C(cHb)}, false));
        cs.push_back(discard("disc_t11_r2", 11, 2, "span (X_a, Y_b, H_a, H_b)",
                             {C(cXa), C(cYb), C(cHa), C(cHb)}, false));
        cs.push_back(discard("disc_t11_r5", 11, 5, "span (X_a, X_b, X_ab, H_a)",
                             {C(cXa), C(cXb), C(cXab), C(cHa)}, false));
        cs.push_back(discard("disc_t12_r2", 12, 2,
                             "Levi decomposable span with radical (X_a, Y_b)",
                             {C(cXab), C(cYab), C(cHa) + C(cHb), C(cXa), C(cYb)},
                             false));
        cs.push_back(discard("disc_t12_r3", 12, 3,
                             "Levi decomposable span with radical (X_b, Y_a)",
                             {C(cXab), C(cYab), C(cHa) + C(cHb), C(cXb), C(cYa)},
                             false));
        cs.push_back(discard(
            "disc_t12_r4", 12, 4,
            "Levi decomposable span with radical (X_a, Y_b, H_a - H_b)",
            {C(cXab), C(cYab), C(cHa) + C(cHb), C(cXa), C(cYb), C(cHa) - C(cHb)},
            false));
        cs.push_back(discard(
            "disc_t12_r5", 12, 5,
            "Levi decomposable span with radical (X_b, Y_a, H_a - H_b)",
            {C(cXab), C(cYab), C(cHa) + C(cHb), C(cXb), C(cYa), C(cHa) - C(cHb)},
            false));

        // Discarded one-parameter families.
        auto discard_family = [&](std::string id, int table, int row,
                                  std::string summary,
                                  std::function<std::vector<Mat3>(const FieldElement&)>
                                      gens) {
            CaseRecord c;
            c.id = std::move(id);
            c.summary = std::move(summary);
            c.complex_table = table;
            c.complex_row = row;
            c.table = 0;
            c.disposition = Disposition::no_transporter;
            c.param_names = {"a"};
            c.validate = [](const Bindings& b) -> std::optional<std::string> {
                FieldElement a = get(b, "a");
                if (a == FieldElement::one() || a == -FieldElement::one())
                    return "a must avoid {-1, 1}";
                return std::nullopt;
            };
            c.default_samples = {bl("a", FieldElement::from(3))};
            c.complex_rep = [gens](const Bindings& b) {
                return make_subalgebra(gens(get(b, "a")), Scalars::complex,
                                       "discarded[a=" + get(b, "a").str() + "]");
            };
            c.assertions = {
                {"nonexistence",
                 "nonexistence of a transporter is recorded without a finite "
                 "certificate; the orbit is excluded from the classification",
                 "assert:" + c.id + ":nonexistence",
                 {}},
            };
            c.expected_orbits = 0;
            return c;
        };
        cs.push_back(discard_family(
            "disc_t10_r7", 10, 7, "family (X_a, X_ab, (a-1)H_a + aH_b)",
            [one](const FieldElement& a) {
                return std::vector<Mat3>{C(cXa), C(cXab), (a - one) * C(cHa) + a * C(cHb)};
            }));
        cs.push_back(discard_family(
            "disc_t10_r8", 10, 8, "family (X_a, Y_b, H_a + aH_b)",
            [](const FieldElement& a) {
                return std::vector<Mat3>{C(cXa), C(cYb), C(cHa) + a * C(cHb)};
            }));
        cs.push_back(discard_family(
            "disc_t11_r4", 11, 4, "family (X_a, X_b, X_ab, aH_a + H_b)",
            [](const FieldElement& a) {
                return std::vector<Mat3>{C(cXa), C(cXb), C(cXab), a * C(cHa) + C(cHb)};
            }));

        return cs;
    }();
    return cases;
}

/// Find a case by id, or by the label of one of its real representatives.
inline const CaseRecord* find_case(const std::string& key) {
    for (const auto& c : load_catalog())
        if (c.id == key) return &c;
    for (const auto& c : load_catalog())
        for (const auto& r : c.real_reps)
            if (r.row_label == key) return &c;
    return nullptr;
}

/// A case with its parameters bound; throws binding_out_of_range when the
/// bindings violate the case's recorded constraints.
struct InstantiatedCase {
    const CaseRecord* rec = nullptr;
    Bindings bindings;
    Subalgebra complex_rep;
    std::vector<std::pair<RealRepSpec, Subalgebra>> reals; // rep spec + row instance
};

inline InstantiatedCase instantiate(const CaseRecord& rec, const Bindings& bindings) {
    for (const auto& p : rec.param_names)
        if (!bindings.count(p)) throw binding_out_of_range("missing parameter " + p);
    if (rec.validate)
        if (auto e = rec.validate(bindings))
            throw binding_out_of_range(rec.id + ": " + *e);
    InstantiatedCase inst;
    inst.rec = &rec;
    inst.bindings = bindings;
    inst.complex_rep = rec.complex_rep(bindings);
    for (const auto& r : rec.real_reps) {
        const TableRow& row = row_by_label(r.row_label);
        FieldElement p = r.row_param ? r.row_param(bindings) : FieldElement::zero();
        inst.reals.emplace_back(r, instantiate_row(row, p));
    }
    return inst;
}

// ---------------------------------------------------------------------------
// Deterministic JSON export
// ---------------------------------------------------------------------------

inline Json catalog_to_json() {
    Json j;
    j["schema_version"] = kCatalogSchemaVersion;

    Json rows = Json::array();
    const FieldElement sample = FieldElement(rat(1, 3));
    for (const auto& r : table_rows()) {
        Json jr;
        jr["label"] = r.label;
        jr["table"] = r.table;
        jr["dim"] = r.dim;
        jr["parametrized"] = r.parametrized;
        if (r.parametrized) {
            jr["range"] = r.range_note;
            jr["sample_parameter"] = to_json(sample);
        }
        Json basis = Json::array();
        for (const Mat3& m : r.vectors(sample)) {
            Json coords = Json::array();
            for (const auto& c : a_coords(m)) coords.push_back(to_json(c));
            basis.push_back(coords);
        }
        jr["basis_a_coords"] = basis;
        rows.push_back(jr);
    }
    j["table_rows"] = rows;

    Json cases = Json::array();
    std::vector<const CaseRecord*> sorted;
    for (const auto& c : load_catalog()) sorted.push_back(&c);
    std::sort(sorted.begin(), sorted.end(),
              [](const CaseRecord* a, const CaseRecord* b) { return a->id < b->id; });
    for (const CaseRecord* c : sorted) {
        Json jc;
        jc["id"] = c->id;
        jc["summary"] = c->summary;
        jc["complex_table"] = c->complex_table;
        jc["complex_row"] = c->complex_row;
        jc["real_table"] = c->table;
        jc["disposition"] = to_string(c->disposition);
        jc["parameters"] = c->param_names;
        Json samples = Json::array();
        for (const auto& b : c->default_samples) {
            Json jb;
            for (const auto& [k, v] : b) jb[k] = to_json(v);
            samples.push_back(jb);
        }
        jc["default_samples"] = samples;
        Bindings b0 = c->default_samples.empty() ? Bindings{} : c->default_samples[0];
        jc["complex_rep"] = to_json(c->complex_rep(b0));
        if (c->transporter) jc["transporter"] = to_json(*c->transporter);
        Json jw = Json::array();
        for (const auto& w : c->witnesses) {
            Json x;
            x["role"] = to_string(w.role);
            x["name"] = w.name;
            x["matrix"] = to_json(w.matrix);
            if (w.target) x["target"] = to_json(*w.target);
            x["anchor"] = w.anchor;
            jw.push_back(x);
        }
        jc["witnesses"] = jw;
        Json jr = Json::array();
        for (const auto& r : c->real_reps) {
            Json x;
            x["row"] = r.row_label;
            if (r.row_param) x["parameter"] = to_json(r.row_param(b0));
            x["conjugator_is_identity"] = !r.conjugator.has_value();
            if (r.conjugator) x["conjugator"] = to_json(*r.conjugator);
            x["anchor"] = r.anchor;
            jr.push_back(x);
        }
        jc["real_reps"] = jr;
        Json je = Json::array();
        for (const auto& e : c->equivalences) {
            Json x;
            x["name"] = e.name;
            x["src_row"] = e.src_row;
            x["dst_row"] = e.dst_row;
            x["conjugator_recorded"] = e.conjugator.has_value();
            if (e.conjugator) x["conjugator"] = to_json(*e.conjugator);
            x["anchor"] = e.anchor;
            je.push_back(x);
        }
        jc["equivalences"] = je;
        Json ja = Json::array();
        for (const auto& a : c->assertions) {
            Json x;
            x["name"] = a.name;
            x["detail"] = a.detail;
            x["anchor"] = a.anchor;
            ja.push_back(x);
        }
        jc["assertions"] = ja;
        jc["expected_real_orbits"] = c->expected_orbits;
        cases.push_back(jc);
    }
    j["cases"] = cases;
    return j;
}

/// Parse an exported catalogue and re-serialize it; byte equality with the
/// original export is the round-trip guarantee.
inline std::string reexport_catalog_json(const std::string& text) {
    Json j = Json::parse(text, nullptr, true);
    if (!j.contains("schema_version") ||
        j["schema_version"].get<std::string>() != kCatalogSchemaVersion)
        throw io_failure("unsupported catalogue schema");
    // Validate the exact matrix payloads before re-emitting.
    for (const auto& jc : j["cases"]) {
        if (jc.contains("transporter")) (void)mat_from_json(jc["transporter"]);
        for (const auto& w : jc["witnesses"]) (void)mat_from_json(w["matrix"]);
    }
    return j.dump(2);
}

} // namespace su21
