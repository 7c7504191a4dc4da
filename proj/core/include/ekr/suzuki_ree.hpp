#pragma once

#include <string>
#include <vector>

#include "ekr/interval.hpp"
#include "ekr/numeric.hpp"

namespace ekr {

struct EigenvalueCount {
  Integer value;
  Integer multiplicity;
  std::string afforded_by;
};

// Sz(q), q = 2^(2l+1), r = 2^(l+1), acting on q^2 + 1 points.
struct SuzukiData {
  Integer q, r;
  Integer order;         // (q^2+1) q^2 (q-1)
  Integer degree;        // q^2 + 1
  Integer derangements;  // sum over the two derangement class families
  std::vector<EigenvalueCount> spectrum;  // ascending by value
  bool r_squared_is_2q = false;
  bool multiplicities_sum_to_order = false;
  bool derangements_match_valency = false;  // family sizes sum to the principal eigenvalue
};

// Throws std::invalid_argument unless q is an odd power of 2 with q >= 8.
SuzukiData sz_spectrum(const Integer& q);

struct ReeFamily {
  std::string name;
  Integer class_count;
  Integer class_size;
};

struct ReeEigenvalue {
  std::string afforded_by;
  Integer value;
};

// Ree(q), q = 3^(2l+1), m = 3^l, acting on q^3 + 1 points.
struct ReeData {
  Integer q, m;
  Integer order;   // (q^3+1) q^3 (q-1)
  Integer degree;  // q^3 + 1
  std::vector<ReeFamily> families;
  Integer family_total;     // sum of count * size
  Integer valency;          // q^3 (q-1)(q^3-2q^2-1)/2
  std::vector<ReeEigenvalue> listed;  // the ten listed characters' values
  Integer xi3;              // -(q-1)(q^3-2q^2-1)/2

  // (i) the family sizes add up to the valency.
  bool family_identity = false;
  // (ii) every listed value other than xi3's is strictly larger than xi3's.
  bool dominance = false;
  // (iii) (|Omega|-1)^2 (|G|/|D| - 2) equals q^6 (4q^2+4)/(q^3-2q^2-1) exactly.
  bool critical_identity = false;
  Enclosure critical_rhs;  // q^3 sqrt((4q^2+4)/(q^3-2q^2-1))
  bool all_pass() const { return family_identity && dominance && critical_identity; }
};

// Throws std::invalid_argument unless q is an odd power of 3 with q >= 27.
ReeData ree_family_check(const Integer& q);

}  // namespace ekr
