#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "takman/error.hpp"
#include "takman/intmatrix.hpp"
#include "takman/word.hpp"

namespace takman {

// Finitely presented group: ordered generator names plus relator words.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  GenRef index_of(std::string_view name) const {
    auto it = std::find(generators.begin(), generators.end(), name);
    if (it == generators.end())
      throw invalid_input("unknown generator '" + std::string(name) + "'",
                          errc::out_of_range);
    return static_cast<GenRef>(it - generators.begin());
  }

  void validate() const {
    for (std::size_t i = 0; i < generators.size(); ++i)
      for (std::size_t j = i + 1; j < generators.size(); ++j)
        if (generators[i] == generators[j])
          throw invalid_input("duplicate generator name '" + generators[i] + "'",
                              errc::generic);
    for (const Word& r : relators)
      for (const Syllable& s : r.syllables())
        if (s.gen < 0 || static_cast<std::size_t>(s.gen) >= generators.size())
          throw invalid_input("relator references generator #" +
                                  std::to_string(s.gen) + " outside the table",
                              errc::out_of_range);
  }
};

// Bijective relabelling of generator indices.
struct ShiftMap {
  std::vector<GenRef> image;  // image[g] = new index of generator g

  std::size_t size() const { return image.size(); }

  bool is_bijection() const {
    std::vector<bool> seen(image.size(), false);
    for (GenRef g : image) {
      if (g < 0 || static_cast<std::size_t>(g) >= image.size()) return false;
      if (seen[static_cast<std::size_t>(g)]) return false;
      seen[static_cast<std::size_t>(g)] = true;
    }
    return true;
  }

  // x_k -> x_{k+1}, indices mod n.
  static ShiftMap cyclic(std::size_t n) {
    ShiftMap s;
    s.image.resize(n);
    for (std::size_t k = 0; k < n; ++k)
      s.image[k] = static_cast<GenRef>((k + 1) % n);
    return s;
  }

  static ShiftMap identity(std::size_t n) {
    ShiftMap s;
    s.image.resize(n);
    std::iota(s.image.begin(), s.image.end(), 0);
    return s;
  }
};

// Rows = relators, cols = generators, entries = exponent sums.
inline IntMatrix abelianization_matrix(const Presentation& p) {
  IntMatrix m(p.relators.size(), p.generators.size());
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    std::vector<std::int64_t> sums = exponent_sums(p.relators[i], p.generators.size());
    for (std::size_t j = 0; j < sums.size(); ++j) m.at(i, j) = sums[j];
  }
  return m;
}

inline AbelianGroup homology(const Presentation& p) {
  return cokernel(abelianization_matrix(p));
}

inline Word rename_generators(const Word& w, const ShiftMap& s) {
  std::vector<Syllable> out;
  out.reserve(w.size());
  for (const Syllable& syl : w.syllables()) {
    if (syl.gen < 0 || static_cast<std::size_t>(syl.gen) >= s.image.size())
      throw invalid_input("shift map does not cover generator #" +
                              std::to_string(syl.gen),
                          errc::out_of_range);
    out.push_back({s.image[static_cast<std::size_t>(syl.gen)], syl.exp});
  }
  return Word::from_raw(out);
}

inline Presentation apply_shift(const Presentation& p, const ShiftMap& s) {
  if (s.size() != p.generators.size() || !s.is_bijection())
    throw invalid_input("apply_shift: map is not a bijection on the generators",
                        errc::generic);
  Presentation out;
  out.generators = p.generators;
  out.relators.reserve(p.relators.size());
  for (const Word& r : p.relators) out.relators.push_back(rename_generators(r, s));
  return out;
}

// Cyclic presentation check: n generators, n relators, and the shift map
// carries each relator to the next one (indices mod n), as reduced words.
inline bool is_cyclic_presentation(const Presentation& p, const ShiftMap& s) {
  const std::size_t n = s.size();
  if (p.generators.size() != n || p.relators.size() != n) return false;
  if (!s.is_bijection()) return false;
  for (std::size_t i = 0; i < n; ++i)
    if (rename_generators(p.relators[i], s) != p.relators[(i + 1) % n])
      return false;
  return true;
}

// Presentation with generators x1..xn and relators obtained from w by the
// index shift x_k -> x_{k+1} (internally 0-based, indices mod n).
inline Presentation make_cyclic_presentation(std::size_t n, const Word& w) {
  if (n < 1) throw invalid_input("cyclic presentation needs n >= 1");
  for (const Syllable& s : w.syllables())
    if (s.gen < 0 || static_cast<std::size_t>(s.gen) >= n)
      throw invalid_input("relator word uses generator #" + std::to_string(s.gen) +
                              " outside x1..x" + std::to_string(n),
                          errc::out_of_range);
  Presentation p;
  p.generators.reserve(n);
  for (std::size_t k = 1; k <= n; ++k)
    p.generators.push_back("x" + std::to_string(k));
  ShiftMap sigma = ShiftMap::cyclic(n);
  Word r = w;
  for (std::size_t i = 0; i < n; ++i) {
    p.relators.push_back(r);
    r = rename_generators(r, sigma);
  }
  return p;
}

// Relator lists are ordered, but shift invariance is a multiset property.
inline bool same_relator_multiset(const Presentation& a, const Presentation& b) {
  if (a.relators.size() != b.relators.size()) return false;
  auto key = [](const Word& w) { return w.syllables(); };
  std::vector<std::vector<Syllable>> ka, kb;
  for (const Word& w : a.relators) ka.push_back(key(w));
  for (const Word& w : b.relators) kb.push_back(key(w));
  std::sort(ka.begin(), ka.end());
  std::sort(kb.begin(), kb.end());
  return ka == kb;
}

// --- presentation file format ------------------------------------------
//
//   gens: x1 x2 x3
//   rel: x2^-1 x1^2 x3^-1 x1
//   rel: x3^-1 x2^2 x1^-1 x2
//
// Round trips bit-exactly through parse_presentation.

inline std::string presentation_to_text(const Presentation& p) {
  std::string out = "gens:";
  for (const std::string& g : p.generators) out += " " + g;
  out += "\n";
  for (const Word& r : p.relators) {
    out += "rel:";
    std::string w = word_to_string(r, p.generators);
    if (!w.empty()) out += " " + w;
    out += "\n";
  }
  return out;
}

inline Presentation parse_presentation(std::string_view text) {
  Presentation p;
  bool have_gens = false;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos
                                                 ? std::string_view::npos
                                                 : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    if (line.empty()) continue;
    if (line.rfind("gens:", 0) == 0) {
      if (have_gens)
        throw invalid_input("duplicate gens: line", errc::parse);
      have_gens = true;
      std::istringstream in{std::string(line.substr(5))};
      std::string name;
      while (in >> name) p.generators.push_back(name);
    } else if (line.rfind("rel:", 0) == 0) {
      if (!have_gens)
        throw invalid_input("rel: line before gens: line", errc::parse);
      p.relators.push_back(parse_word(line.substr(4), p.generators));
    } else {
      throw invalid_input("unrecognized line '" + std::string(line) + "'",
                          errc::parse);
    }
  }
  if (!have_gens) throw invalid_input("missing gens: line", errc::parse);
  p.validate();
  return p;
}

// --- generic computational-group-theory export --------------------------
//
// Free group constructor plus the relators as quoted words in `*` notation.
// The constructor lines are valid GAP input; the quoted words parse in any
// system that accepts `name^exp` factors separated by `*`.

inline std::string presentation_to_cgt(const Presentation& p) {
  std::string out;
  out += "# finitely presented group: " + std::to_string(p.generators.size()) +
         " generators, " + std::to_string(p.relators.size()) + " relators\n";
  for (std::size_t i = 0; i < p.generators.size(); ++i)
    out += "# g" + std::to_string(i + 1) + " = " + p.generators[i] + "\n";

  std::vector<std::string> short_names;
  for (std::size_t i = 0; i < p.generators.size(); ++i)
    short_names.push_back("g" + std::to_string(i + 1));

  out += "F := FreeGroup(";
  for (std::size_t i = 0; i < short_names.size(); ++i)
    out += std::string(i == 0 ? " " : ", ") + "\"" + short_names[i] + "\"";
  out += " );\n";

  bool any_empty = false;
  out += "rels := [";
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    std::string w;
    for (const Syllable& s : p.relators[i].syllables()) {
      if (!w.empty()) w += "*";
      w += short_names[static_cast<std::size_t>(s.gen)];
      if (s.exp != 1) w += "^" + std::to_string(s.exp);
    }
    if (w.empty()) any_empty = true;
    out += std::string(i == 0 ? "\n" : ",\n") + "  \"" + w + "\"";
  }
  out += p.relators.empty() ? "];\n" : "\n];\n";

  if (p.relators.empty()) {
    out += "G := F / [];\n";
  } else if (any_empty) {
    out += "# some relators are the empty word; drop them before constructing G\n";
  } else {
    out += "G := F / ParseRelators( GeneratorsOfGroup( F ), "
           "JoinStringsWithSeparator( rels, \",\" ) );\n";
  }
  return out;
}

}  // namespace takman
