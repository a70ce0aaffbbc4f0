#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "maxsub/lattice.hpp"
#include "maxsub/structure.hpp"

namespace maxsub {

enum class ClassKind { Solvable, F1, F2, Jpr, J, Fprime, Fdoubleprime, F1Set, Hat };

/// Simple groups allowed as nonabelian chief factors of an extension
/// formation f1(s).
struct Allowlist {
  std::set<SimpleTypeId> types;
  std::string provenance = "explicit";

  bool allows(SimpleTypeId const &t) const { return t.abelian || types.count(t) > 0; }
  friend bool operator==(Allowlist const &a, Allowlist const &b) { return a.types == b.types; }
};

struct ClassId {
  ClassKind kind = ClassKind::Solvable;
  std::uint64_t p = 0;                 // prime parameter, 0 when unused
  ClassKind base = ClassKind::Solvable; // for Hat
  Allowlist allowlist;                  // for F1Set and Hat

  static ClassId solvable() { return {}; }
  static ClassId raw(ClassKind kind, std::uint64_t p);
  static ClassId f1_set(Allowlist s);
  static ClassId hat(ClassKind base, std::uint64_t p, Allowlist s);

  bool is_raw() const { return kind != ClassKind::F1Set && kind != ClassKind::Hat; }
  /// Name such as "F1(5)" or "Hat(F2(5))".
  std::string name() const;
};

std::string kind_name(ClassKind k);
/// Accepts Solvable, F1, F2, Jpr, J, Fprime, Fdoubleprime (case-insensitive).
ClassKind parse_class_kind(std::string const &s);
bool kind_takes_prime(ClassKind k);

/// H/N for subgroups N <= H of an analysed group, with N normal in H.
struct Section {
  SubId top = 0;
  SubId bottom = 0;
};

/// Per maximal subgroup (up to conjugacy) record of which disjuncts held.
struct MaximalEvidence {
  SubId maximal = 0;          // representative K with K/N maximal in H/N
  std::uint64_t order = 0;    // |K/N|
  std::uint64_t index = 0;    // |H:K|
  std::optional<std::uint64_t> index_prime; // set when the index is a prime power
  bool solvable = false;
  bool p_solvable = false;
  bool minimal_non_solvable = false;
  bool minimal_non_p_solvable = false;
  bool satisfied = false;
};

struct Membership {
  bool member = false;
  std::vector<MaximalEvidence> evidence;
};

/**
 * Class predicates on sections of one analysed group. Quotients G/N are
 * read through the correspondence theorem: maximal subgroups of G/N are the
 * M/N with N <= M maximal, and composition factors of M/N are those of M
 * minus those of N.
 */
class ClassEvaluator {
 public:
  explicit ClassEvaluator(GroupAnalysis const &a) : a_(a) {}

  GroupAnalysis const &analysis() const { return a_; }
  Section whole() const { return {a_.lattice().whole(), a_.lattice().trivial()}; }
  Section quotient(SubId n) const { return {a_.lattice().whole(), n}; }
  Section subgroup(SubId h) const { return {h, a_.lattice().trivial()}; }

  std::uint64_t order(Section s) const;
  std::vector<SimpleTypeId> factors(Section s) const;
  bool solvable(Section s) const;
  bool p_solvable(Section s, std::uint64_t p) const;

  /// K with N <= K in Max(H); one per class when N is normal in G.
  std::vector<SubId> maximal(Section s) const;
  bool minimal_non_solvable(Section s) const;
  bool minimal_non_p_solvable(Section s, std::uint64_t p) const;

  Membership membership(Section s, ClassId const &c) const;
  bool member(Section s, ClassId const &c) const { return membership(s, c).member; }
  bool member(ClassId const &c) const { return member(whole(), c); }

  /// Least normal N with G/N in c, among normal subgroups of G. Throws
  /// NonUniqueMinimal.
  SubId residual(ClassId const &c) const;

 private:
  bool normal_in_group(SubId n) const;
  MaximalEvidence evidence(Section s, SubId k, std::uint64_t p) const;

  GroupAnalysis const &a_;
};

bool f1_membership(std::vector<SimpleTypeId> const &factors, Allowlist const &s);

/// Nonabelian composition factor types of the groups satisfying `base`.
/// Each entry pairs an analysed group with its primes to scan.
Allowlist allowlist_scan(std::vector<AnalysisPtr> const &corpus, ClassId const &base,
                         std::string const &corpus_id);

struct AxiomViolation {
  std::string group;
  std::string axiom; // "quotient", "R0", "extension"
  std::string detail;
};

struct AxiomReport {
  std::string class_name;
  std::size_t groups = 0;
  std::size_t checks = 0;
  std::vector<AxiomViolation> violations;
};

/// Quotient closure and R0 closure for every group; extension closure for
/// F1Set and Hat classes.
AxiomReport formation_axiom_check(ClassId const &c, std::vector<std::pair<std::string, AnalysisPtr>> const &corpus);

/// Pointwise conjunction of two classes on a section.
bool class_meet_membership(ClassEvaluator const &e, Section s, ClassId const &c1, ClassId const &c2);

/// Formation product c1 c2: the c2-residual of G lies in c1.
bool class_join_membership(ClassEvaluator const &e, ClassId const &c1, ClassId const &c2);

} // namespace maxsub
