#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "liecheck/rational.hpp"

namespace liecheck {

// Weakly decreasing positive parts.
struct Partition {
  std::vector<long> parts;

  long size() const {
    long s = 0;
    for (long p : parts) s += p;
    return s;
  }
  bool operator==(const Partition& o) const { return parts == o.parts; }
  std::string str() const {
    std::string out = "(";
    for (size_t i = 0; i < parts.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(parts[i]);
    }
    return out + ")";
  }
};

inline Partition makePartition(std::vector<long> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<long>());
  for (long p : parts)
    if (p <= 0) throw std::invalid_argument("partition parts must be positive");
  return Partition{std::move(parts)};
}

inline Partition transpose(const Partition& p) {
  Partition t;
  if (p.parts.empty()) return t;
  for (long col = 1; col <= p.parts[0]; ++col) {
    long cnt = 0;
    for (long part : p.parts)
      if (part >= col) ++cnt;
    t.parts.push_back(cnt);
  }
  return t;
}

namespace detail {

// Entries carry a tiebreak so that the convention 0-hat > 0 can be expressed:
// value first, then tag (higher tag = strictly greater).
struct RsEntry {
  Rat value;
  int tag = 0;
  bool operator<(const RsEntry& o) const {
    if (value != o.value) return value < o.value;
    return tag < o.tag;
  }
};

inline Partition rsRowShape(const std::vector<RsEntry>& seq) {
  std::vector<std::vector<RsEntry>> rows;
  for (const RsEntry& x : seq) {
    RsEntry carry = x;
    bool placed = false;
    for (auto& row : rows) {
      // Bump the leftmost entry strictly greater than the carried value;
      // equal values append to the right.
      auto it = std::upper_bound(row.begin(), row.end(), carry);
      if (it == row.end()) {
        row.push_back(carry);
        placed = true;
        break;
      }
      std::swap(*it, carry);
    }
    if (!placed) rows.push_back({carry});
  }
  Partition shape;
  for (auto& row : rows) shape.parts.push_back(long(row.size()));
  return shape;
}

}  // namespace detail

// Row-insertion shape (row lengths, weakly decreasing).
inline Partition rsShape(const RatVec& seq) {
  std::vector<detail::RsEntry> entries;
  for (const Rat& v : seq) entries.push_back({v, 0});
  return detail::rsRowShape(entries);
}

// Every intermediate list of the type-D algorithm, for reporting.
struct BVTrace {
  RatVec inputSequence;
  Partition rsRows;           // row lengths of the insertion tableau
  std::vector<long> q;        // tableau shape, ascending, padded to even length
  std::vector<long> rList;    // r_i = q_i + (i-1)
  std::vector<long> sList;    // r even: r = 2s
  std::vector<long> tList;    // r odd:  r = 2t+1
  std::vector<long> merged;   // s- and t-lists merged, ascending
  std::vector<long> sPrime;   // odd positions of merged
  std::vector<long> tPrime;   // even positions of merged
  std::vector<long> rPrime;   // (2s'+1) u (2t'), ascending
  Partition output;           // q'_i = r'_i - (i-1), sorted descending
};

// Barbasch-Vogan algorithm for so(2n): from the epsilon-coordinates of
// lambda+rho to the partition labelling the open orbit of the associated
// variety. The duplicated zero is split as (0-hat, 0) with 0-hat > 0.
inline Partition bvTypeD(const RatVec& eps, BVTrace* trace = nullptr) {
  size_t n = eps.size();
  std::vector<detail::RsEntry> seq;
  for (size_t i = 0; i < n; ++i) seq.push_back({eps[i], eps[i] == 0 ? 1 : 0});
  for (size_t i = n; i-- > 0;) seq.push_back({-eps[i], 0});

  // q is the shape of the insertion tableau: with strict bumping the worked
  // r-lists force the row-length reading, q = (2^4,1^8) in the so(16) case.
  Partition rows = detail::rsRowShape(seq);

  std::vector<long> q(rows.parts.rbegin(), rows.parts.rend());  // ascending
  // The staircase pairing below needs an even number of rows; a zero part
  // keeps the result unchanged when the count is already even.
  if (q.size() % 2 != 0) q.insert(q.begin(), 0);
  std::vector<long> r(q.size());
  for (size_t i = 0; i < q.size(); ++i) r[i] = q[i] + long(i);

  std::vector<long> s, t;
  for (long ri : r) {
    if (ri % 2 == 0) s.push_back(ri / 2);
    else t.push_back((ri - 1) / 2);
  }
  std::sort(s.begin(), s.end());
  std::sort(t.begin(), t.end());

  std::vector<long> merged(s);
  merged.insert(merged.end(), t.begin(), t.end());
  std::sort(merged.begin(), merged.end());

  std::vector<long> sp, tp;
  for (size_t i = 0; i < merged.size(); ++i) {
    if (i % 2 == 0) sp.push_back(merged[i]);  // 1st, 3rd, ... entries
    else tp.push_back(merged[i]);
  }

  std::vector<long> rp;
  for (long v : sp) rp.push_back(2 * v + 1);
  for (long v : tp) rp.push_back(2 * v);
  std::sort(rp.begin(), rp.end());

  std::vector<long> qp;
  for (size_t i = 0; i < rp.size(); ++i)
    if (rp[i] - long(i) != 0) qp.push_back(rp[i] - long(i));
  std::sort(qp.begin(), qp.end(), std::greater<long>());
  Partition out{qp};

  if (trace) {
    trace->inputSequence = eps;
    trace->rsRows = rows;
    trace->q = q;
    trace->rList = r;
    trace->sList = s;
    trace->tList = t;
    trace->merged = merged;
    trace->sPrime = sp;
    trace->tPrime = tp;
    trace->rPrime = rp;
    trace->output = out;
  }
  return out;
}

// Centraliser dimension of a nilpotent element of so(N) with Jordan type p:
// (sum r_i^2 - #odd parts)/2, r = transpose(p).
inline long orthCentralizerDim(const Partition& p) {
  Partition r = transpose(p);
  long sq = 0;
  for (long ri : r.parts) sq += ri * ri;
  long nOdd = 0;
  for (long part : p.parts)
    if (part % 2 != 0) ++nOdd;
  if ((sq - nOdd) % 2 != 0)
    throw std::invalid_argument("malformed so-partition " + p.str());
  return (sq - nOdd) / 2;
}

}  // namespace liecheck
