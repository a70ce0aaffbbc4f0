#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "maxsub/classes.hpp"
#include "maxsub/lattice.hpp"

namespace maxsub {

enum class Level { Max, Max2 };
enum class CaretSemantics { Union, Intersection };
/// Reading of the index condition in E1: "not a power of p" or "not a
/// power of any prime".
enum class E1Variant { NotPowerOfP, NotPrimePower };

std::string to_string(Level l);
std::string to_string(CaretSemantics s);
std::string to_string(E1Variant v);
CaretSemantics parse_caret(std::string const &s);
E1Variant parse_e1_variant(std::string const &s);

/// A set of subgroups of one analysed group, all at one stratum.
struct SubgroupSet {
  GroupAnalysis const *ambient = nullptr;
  Level level = Level::Max2;
  std::vector<SubId> members; // sorted, unique
  bool degenerate = false;    // built from a prime not dividing |G|

  bool empty() const { return members.empty(); }
  std::size_t size() const { return members.size(); }
  bool contains(SubId h) const;
  bool subset_of(SubgroupSet const &o) const;
  friend bool operator==(SubgroupSet const &a, SubgroupSet const &b)
  {
    return a.ambient == b.ambient && a.level == b.level && a.members == b.members;
  }
};

enum class BaseName { X, L1, L2, S, Pc, Pci, E1, T1 };

std::string to_string(BaseName b);
/// Accepts the atom spellings of the pipeline language, plus Max2star for S.
BaseName parse_base_name(std::string_view s);
Level base_level(BaseName b);

struct FunctorOptions {
  CaretSemantics caret = CaretSemantics::Intersection;
  E1Variant e1 = E1Variant::NotPowerOfP;
};

SubgroupSet base_set(GroupAnalysis const &a, std::uint64_t p, BaseName name, E1Variant e1 = E1Variant::NotPowerOfP);
SubgroupSet full_stratum(GroupAnalysis const &a, Level level);

/// Second maximal subgroups maximal in some member of y.
SubgroupSet phi(SubgroupSet const &y);
SubgroupSet contract(SubgroupSet const &y, SubgroupSet const &z);
SubgroupSet extend(SubgroupSet const &y, SubgroupSet const &z);

/**
 * Pipeline syntax tree.
 *
 *   expr   := term | atom "." expr
 *   term   := factor ("_" atom | "^" atom)*
 *   factor := "Phi(" atom ")" | "(" expr ")" | atom
 */
struct FunctorExpr {
  enum class Op { Atom, Phi, Contract, Extend, Dot };

  Op op = Op::Atom;
  BaseName atom = BaseName::X;   // Atom, Phi, and the right operand of Contract/Extend/left of Dot
  std::vector<FunctorExpr> args; // operand expression for Contract, Extend, Dot

  friend bool operator==(FunctorExpr const &, FunctorExpr const &) = default;
};

/// Throws ParseError carrying the offending position.
FunctorExpr parse_functor(std::string_view text);
/// Surface syntax that reparses to the same tree.
std::string render(FunctorExpr const &e);
/// Tree form, e.g. dot(Pci,caret(contract(Phi(X),L1),E1)).
std::string describe(FunctorExpr const &e);

/// Evaluates pipelines on one group and prime, caching base sets.
class FunctorEvaluator {
 public:
  FunctorEvaluator(GroupAnalysis const &a, std::uint64_t p, FunctorOptions options = {});

  SubgroupSet const &base(BaseName name) const;
  SubgroupSet eval(FunctorExpr const &e) const;
  SubgroupSet eval(std::string_view text) const { return eval(parse_functor(text)); }

  GroupAnalysis const &analysis() const { return a_; }
  std::uint64_t prime() const { return p_; }
  bool degenerate() const { return degenerate_; }
  FunctorOptions const &options() const { return options_; }

 private:
  GroupAnalysis const &a_;
  std::uint64_t p_;
  FunctorOptions options_;
  bool degenerate_;
  mutable std::map<BaseName, SubgroupSet> cache_;
};

/// G/L with its analysis and the map from subgroups containing L.
struct QuotientAnalysis {
  AnalysisPtr analysis;
  Quotient quotient;
  SubId kernel = 0;

  /// Id of H/L in the quotient lattice; H must contain L.
  SubId image(GroupAnalysis const &a, SubId h) const;
};

QuotientAnalysis analyse_quotient(GroupAnalysis const &a, SubId normal);

struct TransportResult {
  SubgroupSet set; // over the quotient analysis
  std::size_t dropped = 0;
};

/// Images of the members containing L; others are dropped and counted.
TransportResult transport_to_quotient(SubgroupSet const &y, QuotientAnalysis const &q);

struct QuotientFormCheck {
  BaseName name = BaseName::X;
  bool agree = false;
  std::size_t transported = 0; // L-containing part of the set on G, mapped to G/L
  std::size_t direct = 0;      // the set computed on G/L
};

/// Compares the base set computed on G/L with the image of its
/// L-containing part on G.
QuotientFormCheck quotient_form_check(GroupAnalysis const &a, QuotientAnalysis const &q, std::uint64_t p,
                                      BaseName name, E1Variant e1 = E1Variant::NotPowerOfP);

// ---------------------------------------------------------------------------

enum class Outcome { VacuousHolds, NonVacuous, Violation };
std::string to_string(Outcome o);

struct TheoremVerdict {
  std::string group;
  std::uint64_t p = 0;
  std::string pipeline;
  std::string target;
  Outcome outcome = Outcome::NonVacuous;
  bool degenerate = false;
  std::size_t set_size = 0;
  std::string witness; // the failing maximal subgroup or factor on Violation
};

/// Empty pipeline and membership: VacuousHolds; empty and not a member:
/// Violation; nonempty: NonVacuous.
TheoremVerdict generating_check(FunctorEvaluator const &fe, std::string const &group, FunctorExpr const &pipeline,
                                ClassId const &target);

struct RegisteredPipeline {
  std::string id;
  std::string text;
  ClassKind target;
};

std::vector<RegisteredPipeline> const &registered_pipelines();
/// Throws UnknownName.
RegisteredPipeline const &registered_pipeline(std::string_view id);

struct EmptinessTransport {
  SubId minimal_normal = 0;
  std::uint64_t order = 0;
  bool empty_on_quotient = true;
};

/// For a pipeline empty on G, whether it is empty on G/L for every minimal
/// normal L. Returns one entry per minimal normal subgroup; none when the
/// pipeline is nonempty on G.
std::vector<EmptinessTransport> emptiness_transport(FunctorEvaluator const &fe, FunctorExpr const &pipeline,
                                                    std::vector<QuotientAnalysis> const &quotients);

// ---------------------------------------------------------------------------

/// The two pipelines a, b of an anti-homomorphism example (1 or 2).
struct AntihomExample {
  int id = 1;
  std::string a;
  std::string b;
  ClassKind ga;
  ClassKind gb;
};

AntihomExample antihom_example(int id);

struct AntihomReport {
  int example = 1;
  std::size_t a_size = 0;
  std::size_t b_size = 0;
  bool b_subset_a = false;
  bool meet_is_b = false; // a meet b equals b
  bool join_is_a = false; // a join b equals a

  bool member_ga = false;
  bool member_gb = false;
  bool member_product = false; // G^{g(b)} in g(a)
  bool member_meet = false;    // G in g(a) and g(b)
  bool product_defined = true; // residual existed
  bool join_identity = false;  // g(b) agrees with g(a) g(b)
  bool meet_identity = false;  // g(a) agrees with g(a) meet g(b)
};

/// Set-level containments for the example's pipelines and the two
/// membership identities for the supplied readings of g(a), g(b).
AntihomReport antihom_check(FunctorEvaluator const &fe, int example, ClassId const &ga, ClassId const &gb);

} // namespace maxsub
