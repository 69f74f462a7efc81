#include "maxdrop/juggling.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <numeric>

#include "maxdrop/error.hpp"

namespace maxdrop {

namespace {

std::string seq_text(const std::vector<int>& t) {
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(t[i]);
  }
  return out;
}

// Shared residue/mean validation on the magnitudes; returns the ball count.
int validate_magnitudes(const std::vector<int>& throws) {
  const int n = static_cast<int>(throws.size());
  if (n == 0) throw DomainError("juggling sequence must be nonempty");
  std::vector<int> owner(static_cast<std::size_t>(n), 0);  // position holding each residue
  long long sum = 0;
  for (int i = 1; i <= n; ++i) {
    int t = std::abs(throws[static_cast<std::size_t>(i - 1)]);
    sum += t;
    int r = (t + i) % n;
    int& slot = owner[static_cast<std::size_t>(r)];
    if (slot != 0)
      throw DomainError("residue collision: throws at positions " +
                        std::to_string(slot) + " and " + std::to_string(i) +
                        " land at the same time mod " + std::to_string(n) +
                        " in (" + seq_text(throws) + ")");
    slot = i;
  }
  // Distinct residues force the sum to be a multiple of the period.
  assert(sum % n == 0);
  return static_cast<int>(sum / n);
}

}  // namespace

JugglingSequence::JugglingSequence(std::vector<int> throws)
    : throws_(std::move(throws)) {
  for (int t : throws_)
    if (t < 0)
      throw DomainError("negative throw " + std::to_string(t) +
                        " in an uncolored sequence");
  balls_ = validate_magnitudes(throws_);
}

ColoredJugglingSequence::ColoredJugglingSequence(std::vector<int> throws)
    : throws_(std::move(throws)) {
  balls_ = validate_magnitudes(throws_);
  const int n = period();
  for (int i = 1; i <= n; ++i) {
    int t = throws_[static_cast<std::size_t>(i - 1)];
    if (t == 0) continue;
    int j = (i + std::abs(t) - 1) % n + 1;  // position of the next rethrow
    int u = throws_[static_cast<std::size_t>(j - 1)];
    if ((t > 0) != (u > 0))
      throw DomainError("color rule broken at position " + std::to_string(i) +
                        ": throw " + std::to_string(t) +
                        " is next thrown at position " + std::to_string(j) +
                        " with the other color");
  }
}

ColoredJugglingSequence::ColoredJugglingSequence(const JugglingSequence& plain)
    : throws_(plain.throws()), balls_(plain.ball_count()) {}

JugglingSequence ColoredJugglingSequence::abs() const {
  std::vector<int> mags;
  mags.reserve(throws_.size());
  for (int t : throws_) mags.push_back(std::abs(t));
  return JugglingSequence(std::move(mags));
}

// ---------------------------------------------------------------------------
// State

namespace {

JugglingState state_of(const std::vector<int>& throws) {
  const int n = static_cast<int>(throws.size());
  int horizon = 0;
  for (int i = 1; i <= n; ++i)
    horizon = std::max(horizon, std::abs(throws[static_cast<std::size_t>(i - 1)]) + i - n);
  JugglingState bits(static_cast<std::size_t>(std::max(horizon, 0)), 0);
  for (int i = 1; i <= n; ++i) {
    int t = std::abs(throws[static_cast<std::size_t>(i - 1)]);
    if (t == 0) continue;
    for (int land = t + i - n; land >= 1; land -= n)
      bits[static_cast<std::size_t>(land - 1)] = 1;
  }
  while (!bits.empty() && bits.back() == 0) bits.pop_back();
  return bits;
}

}  // namespace

JugglingState state(const JugglingSequence& t) { return state_of(t.throws()); }
JugglingState state(const ColoredJugglingSequence& t) {
  return state_of(t.throws());
}

bool is_ground_state(const JugglingSequence& t, int k) {
  return state(t) == JugglingState(static_cast<std::size_t>(std::max(k, 0)), 1);
}
bool is_ground_state(const ColoredJugglingSequence& t, int k) {
  return state(t) == JugglingState(static_cast<std::size_t>(std::max(k, 0)), 1);
}

// ---------------------------------------------------------------------------
// Landing permutation

namespace {

Permutation landing_permutation_of(const std::vector<int>& throws, int balls,
                                   int k) {
  const int n = static_cast<int>(throws.size());
  if (k < 1 || k > n)
    throw DomainError("landing permutation requires 1 <= k <= period");
  if (balls != k || state_of(throws) != JugglingState(static_cast<std::size_t>(k), 1))
    throw DomainError("landing permutation requires the ground state for " +
                      std::to_string(k) + " balls");
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i) {
    int pos = i;
    for (;;) {
      int t = std::abs(throws[static_cast<std::size_t>(pos - 1)]);
      if (t == 0)
        throw DomainError("zero throw at tracked chain position " +
                          std::to_string(pos));
      if (pos + t > n) {
        out.push_back(pos + t - n);
        break;
      }
      pos += t;
    }
  }
  return Permutation(std::move(out));
}

}  // namespace

Permutation landing_permutation(const JugglingSequence& t, int k) {
  return landing_permutation_of(t.throws(), t.ball_count(), k);
}
Permutation landing_permutation(const ColoredJugglingSequence& t, int k) {
  return landing_permutation_of(t.throws(), t.ball_count(), k);
}

// ---------------------------------------------------------------------------
// The permutation <-> sequence correspondence

JugglingSequence to_juggling(const Permutation& p, int k) {
  if (k < 0) throw DomainError("ball count must be nonnegative");
  if (max_drop(p) > k)
    throw DomainError("maximum drop " + std::to_string(max_drop(p)) +
                      " exceeds the ball count " + std::to_string(k));
  std::vector<int> throws;
  throws.reserve(static_cast<std::size_t>(p.size()));
  for (int i = 1; i <= p.size(); ++i) throws.push_back(k - i + p(i));
  return JugglingSequence(std::move(throws));
}

Permutation from_juggling(const JugglingSequence& t, int k) {
  if (t.ball_count() != k)
    throw DomainError("sequence juggles " + std::to_string(t.ball_count()) +
                      " balls, not " + std::to_string(k));
  if (!is_ground_state(t, k))
    throw DomainError("sequence does not have the ground state");
  std::vector<int> values;
  values.reserve(static_cast<std::size_t>(t.period()));
  for (int i = 1; i <= t.period(); ++i)
    values.push_back(t.throws()[static_cast<std::size_t>(i - 1)] + i - k);
  try {
    return Permutation(std::move(values));
  } catch (const DomainError&) {
    throw DomainError("sequence is not the image of a permutation");
  }
}

// ---------------------------------------------------------------------------
// 2-colored correspondence

namespace {

long long factorial(int k) {
  long long f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

ColoredJugglingSequence to_colored_juggling(const SignedPermutation& p, int k,
                                            int cap) {
  const int n = p.size();
  if (k < 0 || k > n)
    throw DomainError("requires 0 <= k <= n (got k = " + std::to_string(k) +
                      ", n = " + std::to_string(n) + ")");
  if (k > cap)
    throw ResourceLimitError("period n*k! too large: k = " + std::to_string(k) +
                             " exceeds cap " + std::to_string(cap));
  if (max_drop(p) > k)
    throw DomainError("maximum drop " + std::to_string(max_drop(p)) +
                      " exceeds the ball count " + std::to_string(k));

  const JugglingSequence plain = to_juggling(p.abs(), k);
  const std::vector<int>& base = plain.throws();
  const long long copies = factorial(k);
  const std::size_t total = static_cast<std::size_t>(n) * static_cast<std::size_t>(copies);
  std::vector<int> magnitude;
  magnitude.reserve(total);
  for (long long c = 0; c < copies; ++c)
    magnitude.insert(magnitude.end(), base.begin(), base.end());

  // Color the k balls from the signs of the first k letters, then let each
  // ball carry its color to the position of its next rethrow.
  std::vector<int> sign(total + 1, 0);
  for (int i = 1; i <= k; ++i) sign[static_cast<std::size_t>(i)] = p(i) < 0 ? -1 : 1;
  for (std::size_t i = 1; i <= total; ++i) {
    if (magnitude[i - 1] == 0) continue;
    if (sign[i] == 0)
      throw DomainError("internal: uncolored throw at position " +
                        std::to_string(i));
    std::size_t j = i + static_cast<std::size_t>(magnitude[i - 1]);
    if (j <= total) sign[j] = sign[i];
  }
  std::vector<int> throws(total);
  for (std::size_t i = 1; i <= total; ++i)
    throws[i - 1] = sign[i] < 0 ? -magnitude[i - 1] : magnitude[i - 1];
  return ColoredJugglingSequence(std::move(throws));
}

SignedPermutation from_colored_juggling(const ColoredJugglingSequence& t,
                                        int n, int k) {
  if (n < 1 || k < 0 || k > n)
    throw DomainError("requires n >= 1 and 0 <= k <= n");
  if (k > 20 ||
      static_cast<long long>(t.period()) != n * factorial(k))
    throw DomainError("period " + std::to_string(t.period()) +
                      " does not equal n * k!");
  const std::vector<int>& throws = t.throws();
  for (int i = 0; i < t.period(); ++i)
    if (std::abs(throws[static_cast<std::size_t>(i)]) !=
        std::abs(throws[static_cast<std::size_t>(i % n)]))
      throw DomainError("magnitudes are not periodic with period " +
                        std::to_string(n));
  if (t.ball_count() != k)
    throw DomainError("sequence juggles " + std::to_string(t.ball_count()) +
                      " balls, not " + std::to_string(k));
  if (!is_ground_state(t, k))
    throw DomainError("sequence does not have the ground state");

  std::vector<int> base;
  base.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    base.push_back(std::abs(throws[static_cast<std::size_t>(i)]));
  Permutation plain = from_juggling(JugglingSequence(std::move(base)), k);

  std::vector<int> values = plain.values();
  for (int i = 0; i < k; ++i)
    if (throws[static_cast<std::size_t>(i)] < 0)
      values[static_cast<std::size_t>(i)] = -values[static_cast<std::size_t>(i)];
  return SignedPermutation(std::move(values));
}

// ---------------------------------------------------------------------------
// Diagrams

DiagramFormat parse_diagram_format(const std::string& token) {
  if (token == "ascii") return DiagramFormat::ascii;
  if (token == "svg") return DiagramFormat::svg;
  throw DomainError("unsupported diagram format '" + token +
                    "' (expected ascii or svg)");
}

namespace {

struct Arc {
  int from;
  int to;
  bool negative;
};

std::vector<Arc> collect_arcs(const std::vector<int>& throws) {
  std::vector<Arc> arcs;
  for (int i = 1; i <= static_cast<int>(throws.size()); ++i) {
    int t = throws[static_cast<std::size_t>(i - 1)];
    if (t == 0) continue;  // empty hand, no arc
    arcs.push_back({i, i + std::abs(t), t < 0});
  }
  return arcs;
}

std::string render_ascii(const std::vector<int>& throws) {
  const int n = static_cast<int>(throws.size());
  std::vector<Arc> arcs = collect_arcs(throws);
  int last = n;
  for (const Arc& a : arcs) last = std::max(last, a.to);

  // First-fit row assignment, lowest row first; arcs may share an endpoint.
  std::vector<std::vector<std::pair<int, int>>> rows;
  std::vector<int> row_of(arcs.size(), 0);
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    std::size_t r = 0;
    for (;; ++r) {
      if (r == rows.size()) rows.emplace_back();
      bool free = true;
      for (auto [f, t] : rows[r])
        if (std::max(f, arcs[a].from) < std::min(t, arcs[a].to)) {
          free = false;
          break;
        }
      if (free) break;
    }
    rows[r].push_back({arcs[a].from, arcs[a].to});
    row_of[a] = static_cast<int>(r);
  }

  const int width = 3;
  auto center = [&](int slot) { return (slot - 1) * width + 1; };
  std::vector<std::string> grid(rows.size(),
                                std::string(static_cast<std::size_t>(last * width), ' '));
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    std::string& line = grid[static_cast<std::size_t>(row_of[a])];
    int cf = center(arcs[a].from);
    int ct = center(arcs[a].to);
    for (int c = cf + 1; c < ct; ++c)
      line[static_cast<std::size_t>(c)] = arcs[a].negative ? '=' : '-';
    line[static_cast<std::size_t>(cf)] = 'o';
    line[static_cast<std::size_t>(ct)] = 'o';
  }

  std::string out;
  for (std::size_t r = rows.size(); r-- > 0;) {
    std::string line = grid[r];
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  auto cell = [](const std::string& s) {
    std::string c = s.size() < 2 ? std::string(2 - s.size(), ' ') + s : s;
    return c + ' ';
  };
  std::string axis, labels;
  for (int c = 1; c <= last; ++c) axis += cell(std::to_string(c));
  while (!axis.empty() && axis.back() == ' ') axis.pop_back();
  out += axis;
  out += '\n';
  for (int c = 1; c <= n; ++c)
    labels += cell(std::to_string(throws[static_cast<std::size_t>(c - 1)]));
  while (!labels.empty() && labels.back() == ' ') labels.pop_back();
  out += labels;
  out += '\n';
  return out;
}

std::string render_svg(const std::vector<int>& throws) {
  const int n = static_cast<int>(throws.size());
  std::vector<Arc> arcs = collect_arcs(throws);
  int last = n;
  int tallest = 0;
  for (const Arc& a : arcs) {
    last = std::max(last, a.to);
    tallest = std::max(tallest, a.to - a.from);
  }
  const int unit = 20;
  const int top = tallest * unit / 2 + unit;
  const int width = (last + 1) * unit;
  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 -" +
         std::to_string(top) + " " + std::to_string(width) + " " +
         std::to_string(top + 2 * unit) + "\">\n";
  svg += "<style>.pos{fill:none;stroke:#223;stroke-width:2}"
         ".neg{fill:none;stroke:#b22;stroke-width:2;stroke-dasharray:6 3}"
         ".axis{stroke:#888;stroke-width:1}"
         "text{font:10px monospace;fill:#444}</style>\n";
  svg += "<line class=\"axis\" x1=\"" + std::to_string(unit / 2) +
         "\" y1=\"0\" x2=\"" + std::to_string(last * unit + unit / 2) +
         "\" y2=\"0\"/>\n";
  for (const Arc& a : arcs) {
    int x1 = a.from * unit;
    int x2 = a.to * unit;
    int r = (x2 - x1) / 2;
    svg += "<path class=\"";
    svg += a.negative ? "neg" : "pos";
    svg += "\" d=\"M " + std::to_string(x1) + " 0 A " + std::to_string(r) +
           " " + std::to_string(r) + " 0 0 1 " + std::to_string(x2) +
           " 0\"/>\n";
  }
  for (int c = 1; c <= last; ++c) {
    svg += "<text x=\"" + std::to_string(c * unit - 3) + "\" y=\"12\">" +
           std::to_string(c) + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace

std::string render_diagram(const ColoredJugglingSequence& t,
                           DiagramFormat format) {
  return format == DiagramFormat::ascii ? render_ascii(t.throws())
                                        : render_svg(t.throws());
}

}  // namespace maxdrop
