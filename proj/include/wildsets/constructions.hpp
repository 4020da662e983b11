#pragma once

#include <string>
#include <vector>

#include "wildsets/equivalence.hpp"

namespace wildsets {

/// Observations recorded while building a certificate.
using Notes = std::vector<std::string>;

/// Every place of S 2-divisible; the wild set is S.
Certificate construct_rank0(const CurvePtr& X, const std::vector<Place>& S, const std::vector<Place>& avoid = {});
/// rk G_{X\{p,q}} = 1 and -1 a local square at p and q.
Certificate construct_rank1_pair(const CurvePtr& X, const Place& p, const Place& q,
                                 const std::vector<Place>& avoid = {});
Certificate construct_rank1_triple(const CurvePtr& X, const Place& p1, const Place& p2, const Place& p3,
                                   const std::vector<Place>& avoid = {}, Notes* notes = nullptr);
/// rk G_{X\S} <= 1, |S| >= 2 when the rank is 1.
Certificate construct_rank1(const CurvePtr& X, const std::vector<Place>& S, const std::vector<Place>& avoid = {},
                            Notes* notes = nullptr);
/// P independent in Pic X / 2 Pic X, Q 2-divisible and pairwise in the smile
/// relation, |P| <= |Q|; the wild set is P + Q of rank |P|.
Certificate construct_general(const CurvePtr& X, const std::vector<Place>& P, const std::vector<Place>& Q,
                              const std::vector<Place>& avoid = {}, Notes* notes = nullptr);

}  // namespace wildsets
