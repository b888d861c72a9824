#include "platorder/complexity.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>

#include "platorder/errors.hpp"

namespace platorder {

ComplexityFunction ComplexityFunction::geodesic(int radius_limit) {
  if (radius_limit < 0) throw usage_error("radius limit must be nonnegative");
  return {GeodesicArtin, radius_limit};
}

ComplexityFunction ComplexityFunction::garside() { return {GarsideProper, 0}; }

ComplexityFunction ComplexityFunction::parse(const std::string& text) {
  if (text == "garside") return garside();
  if (text.rfind("geodesic:", 0) == 0) {
    int limit = 0;
    const char* first = text.data() + 9;
    const char* last = text.data() + text.size();
    auto [p, ec] = std::from_chars(first, last, limit);
    if (ec == std::errc() && p == last) return geodesic(limit);
  }
  throw usage_error("unknown complexity function '" + text +
                    "' (expected \"geodesic:<limit>\" or \"garside\")");
}

std::string ComplexityFunction::str() const {
  return kind == GeodesicArtin ? "geodesic:" + std::to_string(radius_limit)
                               : "garside";
}

const BallEntry* Ball::find(const std::string& key) const {
  auto it = index.find(key);
  return it == index.end() ? nullptr : &entries[static_cast<size_t>(it->second)];
}

namespace {

std::vector<int> generator_letters(int strands) {
  std::vector<int> ls;
  for (int i = 1; i < strands; ++i) ls.push_back(i);
  for (int i = 1; i < strands; ++i) ls.push_back(-i);
  return ls;
}

}  // namespace

Ball ball_enumerate(int strands, int radius, std::size_t element_cap) {
  require_strands(strands);
  if (radius < 0) throw usage_error("ball radius must be nonnegative");

  Ball ball;
  ball.strands = strands;
  ball.radius = radius;

  BraidWord identity(strands);
  ball.entries.push_back({normal_form(identity), identity, 0});
  ball.index.emplace(ball.entries[0].element.key(), 0);

  const std::vector<int> letters = generator_letters(strands);
  size_t level_begin = 0, level_end = 1;
  for (int len = 1; len <= radius; ++len) {
    std::vector<BallEntry> fresh;
    for (size_t i = level_begin; i < level_end; ++i) {
      for (int l : letters) {
        BraidWord word = ball.entries[i].witness;
        word.letters.push_back(l);
        BraidElement e = normal_form(word);
        std::string key = e.key();
        if (ball.index.count(key)) continue;
        ball.index.emplace(std::move(key), -1);  // placeholder, fixed below
        fresh.push_back({std::move(e), std::move(word), len});
        if (ball.index.size() > element_cap)
          throw budget_error("ball enumeration exceeded the element cap of " +
                                 std::to_string(element_cap),
                             static_cast<long long>(ball.index.size()));
      }
    }
    // (length, key) order; the witness kept is the first produced when
    // parents are visited in that same order, so output is deterministic
    std::sort(fresh.begin(), fresh.end(),
              [](const BallEntry& a, const BallEntry& b) {
                return a.element.key() < b.element.key();
              });
    for (auto& entry : fresh) {
      ball.index[entry.element.key()] = static_cast<int>(ball.entries.size());
      ball.entries.push_back(std::move(entry));
    }
    level_begin = level_end;
    level_end = ball.entries.size();
    if (level_begin == level_end) break;  // group exhausted (never for n >= 2)
  }
  return ball;
}

namespace {

struct Frontier {
  std::unordered_map<std::string, int> dist;
  std::vector<BraidWord> words;  // words of the current level, in order
  int level = 0;
};

// Expand one level by right multiplication; returns the best meeting total
// against the other side, or -1.
int expand_level(Frontier& side, const Frontier& other, int strands,
                 std::size_t element_cap) {
  std::vector<BraidWord> next;
  int best = -1;
  for (const auto& w : side.words) {
    for (int l : generator_letters(strands)) {
      BraidWord word = w;
      word.letters.push_back(l);
      std::string key = normal_form(word).key();
      if (side.dist.count(key)) continue;
      side.dist.emplace(key, side.level + 1);
      if (side.dist.size() > element_cap)
        throw budget_error("geodesic search exceeded the element cap of " +
                               std::to_string(element_cap),
                           static_cast<long long>(side.dist.size()));
      auto hit = other.dist.find(key);
      if (hit != other.dist.end()) {
        int total = side.level + 1 + hit->second;
        if (best < 0 || total < best) best = total;
      }
      next.push_back(std::move(word));
    }
  }
  side.words = std::move(next);
  ++side.level;
  return best;
}

}  // namespace

int geodesic_length(const BraidWord& w, int radius_limit, std::size_t element_cap) {
  if (radius_limit < 0) throw usage_error("radius limit must be nonnegative");
  const std::string target_key = normal_form(w).key();
  const std::string id_key = normal_form(BraidWord(w.strands)).key();
  if (target_key == id_key) return 0;

  Frontier fwd, bwd;
  fwd.dist.emplace(id_key, 0);
  fwd.words.push_back(BraidWord(w.strands));
  bwd.dist.emplace(target_key, 0);
  bwd.words.push_back(w);

  // level-synchronous bidirectional search: after expanding to radii (f, b)
  // with no meeting point, the distance exceeds f + b
  while (fwd.level + bwd.level < radius_limit) {
    Frontier& side = fwd.words.size() <= bwd.words.size() ? fwd : bwd;
    const Frontier& other = (&side == &fwd) ? bwd : fwd;
    int best = expand_level(side, other, w.strands, element_cap);
    if (best >= 0) return best;
    if (side.words.empty()) break;
  }
  throw not_found_error("no representative within geodesic radius " +
                            std::to_string(radius_limit),
                        radius_limit);
}

int garside_complexity(const BraidElement& e) {
  return std::abs(e.inf) + e.canonical_length();
}

int complexity_of(const ComplexityFunction& c, const BraidWord& w) {
  if (c.kind == ComplexityFunction::GeodesicArtin)
    return geodesic_length(w, c.radius_limit);
  return garside_complexity(normal_form(w));
}

}  // namespace platorder
