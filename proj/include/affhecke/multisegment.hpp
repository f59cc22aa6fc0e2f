#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "affhecke/partition.hpp"

namespace affhecke {

/// Integer interval [i, j], i <= j.
struct Segment {
  int i = 0;
  int j = 0;

  Segment() = default;
  Segment(int start, int end);

  int length() const { return j - i + 1; }
  bool contains(int p) const { return i <= p && p <= j; }
  std::string to_string() const;
  // Lexicographic (i, j); used for container keys only. The PBW order is segment_less.
  friend auto operator<=>(const Segment&, const Segment&) = default;
};

/// PBW order: [i,j] < [k,l] iff j < l, or j = l and i < k.
bool segment_less(const Segment& s, const Segment& t);

/// s precedes t: linked with s to the left, i.e. s.i < t.i, s.j < t.j, t.i <= s.j + 1.
bool precedes(const Segment& s, const Segment& t);
inline bool linked(const Segment& s, const Segment& t) { return precedes(s, t) || precedes(t, s); }

/// Finite formal sum of segments with positive multiplicities.
class Multisegment {
 public:
  Multisegment() = default;
  Multisegment(std::initializer_list<Segment> segs);
  explicit Multisegment(const std::vector<Segment>& segs);

  /// Accepts "[i,j]+[k,l]+2[p,q]"; "[p]" abbreviates [p,p]; "0" or "" is empty.
  static Multisegment parse(const std::string& text);

  void add(const Segment& s, int mult = 1);
  /// Removes one copy; the segment must be present.
  void remove(const Segment& s);

  const std::map<Segment, int>& mults() const { return m_; }
  int mult(const Segment& s) const;
  bool empty() const { return m_.empty(); }
  int degree() const;
  int count() const;  // number of segments with multiplicity
  /// Segments in PBW order, repeated by multiplicity.
  std::vector<Segment> pbw_sequence() const;
  /// Number of segments containing each point.
  std::map<int, int> dimension_vector() const;
  int min_point() const;
  int max_point() const;
  Multisegment shifted(int by) const;
  /// Sum of squared segment lengths; strictly increases along elementary moves.
  int rank_key() const;

  /// Canonical text in PBW order, e.g. "[1,1]+2[1,2]".
  std::string to_string() const;

  friend Multisegment operator+(const Multisegment& a, const Multisegment& b);
  friend auto operator<=>(const Multisegment&, const Multisegment&) = default;

 private:
  std::map<Segment, int> m_;
};

/// Degree and dimension vector of a multisegment.
struct DegreeInfo {
  int degree = 0;
  std::map<int, int> dimvector;
};
DegreeInfo degree_and_dimvector(const Multisegment& m);

/// Every multisegment obtained from m by one union/intersection move on a linked pair.
std::set<Multisegment> elementary_moves(const Multisegment& m);

/// m ⊴ n: n is reachable from m by a sequence of elementary moves.
bool zel_leq(const Multisegment& m, const Multisegment& n);

/// All n with m ⊴ n.
std::set<Multisegment> zel_upper_set(const Multisegment& m);

/// Every multisegment with the given dimension vector.
std::vector<Multisegment> multisegments_of_weight(const std::map<int, int>& dimvector);

/// Every multisegment supported in [lo, hi] with degree <= max_degree (including the empty one).
std::vector<Multisegment> multisegments_in_window(int lo, int hi, int max_degree);

/// Row convention: row i of lambda gives the segment [a - i + 1, a - i + lambda_i].
Multisegment evaluation_multisegment(const Partition& lambda, int a);

/// Partition lambda and exponent a with evaluation_multisegment(lambda, a) == m, if any.
struct EvaluationPoint {
  Partition lambda;
  int a = 0;
};
bool as_evaluation_point(const Multisegment& m, EvaluationPoint& out);

/// Index set J of a flag minor of the lower unitriangular N x N matrix
/// (rows J, columns 1..|J|).
struct ColumnSet {
  std::set<int> elements;
  int rank = 0;  // ambient N

  std::string to_string() const;
  friend auto operator<=>(const ColumnSet&, const ColumnSet&) = default;
};

bool weakly_separated(const ColumnSet& a, const ColumnSet& b);

/// The flag minor of an evaluation multisegment, placed in the window {1..N}.
/// Requires every segment to lie in [1, N-1].
ColumnSet flag_minor_set(const Multisegment& m, int N);
/// Inverse of flag_minor_set; J must not be an initial interval {1..k}.
Multisegment flag_minor_multisegment(const ColumnSet& J);
/// All nontrivial flag minor index sets of {1..N}.
std::vector<ColumnSet> all_flag_minor_sets(int N);

struct HookViolation {
  std::size_t first = 0;  // indices into the exponent list
  std::size_t second = 0;
  int a_first = 0;
  int a_second = 0;
  int hook = 0;
};

struct HookVerdict {
  bool simple = true;
  std::vector<HookViolation> violations;
};

/// Simple iff |a_i - a_j| is never a hook length of lambda.
HookVerdict hook_criterion(const Partition& lambda, const std::vector<int>& exps,
                           HookMode mode = HookMode::positive);

}  // namespace affhecke
