#include "liecx/enveloping.hpp"

#include <algorithm>
#include <stdexcept>

namespace liecx {

PBWMonomial PBWMonomial::from_word(const std::vector<int>& sorted_word) {
  PBWMonomial m;
  for (int g : sorted_word) {
    if (!m.factors.empty() && m.factors.back().first == g)
      ++m.factors.back().second;
    else
      m.factors.emplace_back(g, 1);
  }
  return m;
}

void EnvelopingPoly::add(const PBWMonomial& m, const Rat& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

EnvelopingPoly& EnvelopingPoly::operator+=(const EnvelopingPoly& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

EnvelopingPoly EnvelopingPoly::scaled(const Rat& k) const {
  EnvelopingPoly r;
  if (k == 0) return r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * k);
  return r;
}

EnvelopingPoly Enveloping::one_term(const std::vector<int>& word, const Rat& coef) const {
  std::vector<int> w = word;
  if (!std::is_sorted(w.begin(), w.end()))
    throw std::invalid_argument("one_term expects a sorted word; use normal_order");
  EnvelopingPoly p;
  p.add(PBWMonomial::from_word(w), coef);
  return p;
}

EnvelopingPoly Enveloping::generator(int g, const Rat& coef) const {
  EnvelopingPoly p;
  p.add(PBWMonomial::from_word({g}), coef);
  return p;
}

EnvelopingPoly Enveloping::generator(const std::string& name, const Rat& coef) const {
  return generator(alg_->index(name), coef);
}

EnvelopingPoly Enveloping::normalize_word_memo(const std::vector<int>& word) {
  // Find the leftmost inversion; sorted words are monomials.
  size_t pos = word.size();
  for (size_t i = 0; i + 1 < word.size(); ++i)
    if (word[i] > word[i + 1]) {
      pos = i;
      break;
    }
  if (pos == word.size()) {
    EnvelopingPoly p;
    p.add(PBWMonomial::from_word(word), 1);
    return p;
  }
  auto it = cache_.find(word);
  if (it != cache_.end()) return it->second;

  std::vector<int> swapped = word;
  std::swap(swapped[pos], swapped[pos + 1]);
  EnvelopingPoly result = normalize_word_memo(swapped);
  // Z_b Z_a = Z_a Z_b + [Z_b, Z_a]
  const AlgebraElement br = alg_->bracket_basis(word[pos], word[pos + 1]);
  for (const auto& [g, c] : br.coeffs()) {
    std::vector<int> shorter;
    shorter.reserve(word.size() - 1);
    shorter.insert(shorter.end(), word.begin(), word.begin() + pos);
    shorter.push_back(g);
    shorter.insert(shorter.end(), word.begin() + pos + 2, word.end());
    result += normalize_word_memo(shorter).scaled(c);
  }
  cache_.emplace(word, result);
  return result;
}

EnvelopingPoly Enveloping::normal_order(const std::vector<int>& word) {
  return normalize_word_memo(word);
}

EnvelopingPoly Enveloping::normal_order_scheduled(const std::vector<int>& word,
                                                  SwapSchedule schedule, std::uint64_t seed) const {
  DetRng rng(seed);
  // Work over raw words so the schedule choice is visible step by step.
  std::map<std::vector<int>, Rat> pending;
  pending[word] = 1;
  EnvelopingPoly done;
  while (!pending.empty()) {
    auto [w, coef] = *pending.begin();
    pending.erase(pending.begin());
    std::vector<size_t> inversions;
    for (size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i] > w[i + 1]) inversions.push_back(i);
    if (inversions.empty()) {
      done.add(PBWMonomial::from_word(w), coef);
      continue;
    }
    size_t pos;
    switch (schedule) {
      case SwapSchedule::kLeftmost: pos = inversions.front(); break;
      case SwapSchedule::kRightmost: pos = inversions.back(); break;
      default: pos = inversions[rng.next() % inversions.size()]; break;
    }
    std::vector<int> swapped = w;
    std::swap(swapped[pos], swapped[pos + 1]);
    pending[swapped] += coef;
    if (pending[swapped] == 0) pending.erase(swapped);
    const AlgebraElement br = alg_->bracket_basis(w[pos], w[pos + 1]);
    for (const auto& [g, c] : br.coeffs()) {
      std::vector<int> shorter;
      shorter.reserve(w.size() - 1);
      shorter.insert(shorter.end(), w.begin(), w.begin() + pos);
      shorter.push_back(g);
      shorter.insert(shorter.end(), w.begin() + pos + 2, w.end());
      pending[shorter] += coef * c;
      if (pending[shorter] == 0) pending.erase(shorter);
    }
  }
  return done;
}

EnvelopingPoly Enveloping::multiply(const EnvelopingPoly& p, const EnvelopingPoly& q) {
  EnvelopingPoly out;
  for (const auto& [mp, cp] : p.terms())
    for (const auto& [mq, cq] : q.terms()) {
      std::vector<int> w = mp.word();
      std::vector<int> wq = mq.word();
      if (!w.empty() && !wq.empty() && w.back() <= wq.front()) {
        // Already ordered end-to-end; skip the rewriter.
        w.insert(w.end(), wq.begin(), wq.end());
        out.add(PBWMonomial::from_word(w), cp * cq);
      } else {
        w.insert(w.end(), wq.begin(), wq.end());
        out += normalize_word_memo(w).scaled(cp * cq);
      }
    }
  return out;
}

EnvelopingPoly Enveloping::commutator_generator(const EnvelopingPoly& p, int gen) {
  EnvelopingPoly out;
  for (const auto& [m, c] : p.terms()) {
    std::vector<int> w = m.word();
    // [Z_{i1}...Z_{ik}, Z_a] = sum_j prefix [Z_{ij}, Z_a] suffix
    for (size_t j = 0; j < w.size(); ++j) {
      const AlgebraElement br = alg_->bracket_basis(w[j], gen);
      for (const auto& [g, k] : br.coeffs()) {
        std::vector<int> term = w;
        term[j] = g;
        out += normalize_word_memo(term).scaled(c * k);
      }
    }
  }
  return out;
}

}  // namespace liecx
