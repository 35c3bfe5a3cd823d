#include "bgw/diagram.hpp"

#include "bgw/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace bgw {

namespace {

// Ribbon form of the base: the elements themselves when they are permutations
// of one degree, otherwise the left-regular action.
std::vector<Perm> ribbon_perms(const FiniteGroup& b) {
  std::vector<Perm> out;
  out.reserve(static_cast<std::size_t>(b.order()));
  int deg = -1;
  bool direct = true;
  for (const auto& e : b.elements()) {
    const Perm* p = std::get_if<Perm>(&e);
    if (!p || (deg >= 0 && p->degree() != deg)) {
      direct = false;
      break;
    }
    deg = p->degree();
  }
  for (int x = 0; x < b.order(); ++x) out.push_back(direct ? std::get<Perm>(b.element(x)) : bead_as_perm(b, x));
  return out;
}

// One step along the listing when the base is listed as a cycle (element l+1 = x * element l),
// else the smallest-index element of the largest order whose cyclic group holds every bead.
int twist_generator(const FiniteGroup& b, const std::vector<int>& beads) {
  int n = b.order();
  if (n > 1) {
    int x = b.mul(1, b.inv(0));
    bool listed = true;
    for (int l = 0; l < n && listed; ++l) listed = b.mul(x, l) == (l + 1) % n;
    if (listed) return x;
  }
  int best = -1;
  int best_order = 0;
  for (int g = 0; g < b.order(); ++g) {
    int ord = b.elem_order(g);
    if (ord <= best_order) continue;
    auto cyc = b.subgroup_of({g});
    bool holds = std::all_of(beads.begin(), beads.end(),
                             [&](int x) { return std::binary_search(cyc.begin(), cyc.end(), x); });
    if (holds) {
      best = g;
      best_order = ord;
    }
  }
  return best;
}

int discrete_log(const FiniteGroup& b, int g, int x) {
  int p = b.identity();
  for (int k = 0, n = b.elem_order(g); k < n; ++k, p = b.mul(p, g))
    if (p == x) return k;
  return -1;
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

Perm path_perm(const DiagramSpec& d) {
  require(static_cast<int>(d.path.size()) == d.strands, "diagram: path size");
  Perm p(d.path);  // validates
  return p;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Horizontal position of each slot.
std::vector<int> slot_x(const DiagramSpec& d, int pitch, int ribbon_pitch, int ribbon_gap, int margin) {
  std::vector<int> x(static_cast<std::size_t>(d.strands));
  if (d.style == DiagramStyle::bundles) {
    int cursor = margin;
    for (const auto& b : d.bundles) {
      for (std::size_t l = 0; l < b.size(); ++l) x[static_cast<std::size_t>(b[l])] = cursor + static_cast<int>(l) * ribbon_pitch;
      cursor += static_cast<int>(b.size()) * ribbon_pitch + ribbon_gap;
    }
  } else {
    for (int s = 0; s < d.strands; ++s) x[static_cast<std::size_t>(s)] = margin + s * pitch;
  }
  return x;
}

std::string render_svg(const DiagramSpec& d) {
  constexpr int kPitch = 40, kRibbonPitch = 12, kRibbonGap = 24, kMargin = 30;
  constexpr int kTop = 50, kBottom = 210;
  auto x = slot_x(d, kPitch, kRibbonPitch, kRibbonGap, kMargin);
  int right = d.strands ? *std::max_element(x.begin(), x.end()) : 0;
  int width = right + kMargin;
  int height = kBottom + (d.caption.empty() ? 30 : 50);
  int mid = (kTop + kBottom) / 2;

  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
    << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  o << "<g fill=\"none\" stroke=\"black\" stroke-width=\"2\">\n";
  for (int s = 0; s < d.strands; ++s) {
    int x0 = x[static_cast<std::size_t>(s)];
    int x1 = x[static_cast<std::size_t>(d.path[static_cast<std::size_t>(s)])];
    o << "<path d=\"M " << x0 << ' ' << kBottom << " C " << x0 << ' ' << mid << ", " << x1 << ' ' << mid << ", " << x1
      << ' ' << kTop << "\"/>\n";
  }
  o << "</g>\n";
  o << "<g font-family=\"monospace\" font-size=\"11\" text-anchor=\"middle\">\n";
  if (d.style == DiagramStyle::beads) {
    for (int s = 0; s < d.strands; ++s) {
      const auto& label = d.beads[static_cast<std::size_t>(s)];
      if (label.empty()) continue;
      int xs = x[static_cast<std::size_t>(s)];
      o << "<circle cx=\"" << xs << "\" cy=\"" << kTop << "\" r=\"5\" fill=\"white\" stroke=\"black\"/>\n";
      o << "<text x=\"" << xs << "\" y=\"" << kTop - 12 << "\">" << escape(label) << "</text>\n";
    }
  } else if (d.style == DiagramStyle::twists) {
    for (int s = 0; s < d.strands; ++s) {
      int xs = x[static_cast<std::size_t>(s)];
      o << "<rect x=\"" << xs - 6 << "\" y=\"" << kTop - 6 << "\" width=\"12\" height=\"12\" fill=\"white\" stroke=\"black\"/>\n";
      o << "<text x=\"" << xs << "\" y=\"" << kTop - 12 << "\">" << d.twist[static_cast<std::size_t>(s)] << "</text>\n";
    }
  } else {
    for (std::size_t r = 0; r < d.bundles.size(); ++r) {
      const auto& b = d.bundles[r];
      int xa = x[static_cast<std::size_t>(b.front())];
      int xb = x[static_cast<std::size_t>(b.back())];
      o << "<line x1=\"" << xa - 4 << "\" y1=\"" << kBottom + 6 << "\" x2=\"" << xb + 4 << "\" y2=\"" << kBottom + 6
        << "\" stroke=\"black\"/>\n";
      o << "<text x=\"" << (xa + xb) / 2 << "\" y=\"" << kBottom + 20 << "\">" << r << "</text>\n";
    }
  }
  if (d.style != DiagramStyle::bundles) {
    for (int s = 0; s < d.strands; ++s)
      o << "<text x=\"" << x[static_cast<std::size_t>(s)] << "\" y=\"" << kBottom + 20 << "\">" << s << "</text>\n";
  }
  if (!d.caption.empty())
    o << "<text x=\"" << width / 2 << "\" y=\"" << kBottom + 42 << "\">" << escape(d.caption) << "</text>\n";
  o << "</g>\n</svg>\n";
  return o.str();
}

std::string render_ascii(const DiagramSpec& d) {
  auto x = slot_x(d, 4, 2, 2, 0);
  int width = d.strands ? *std::max_element(x.begin(), x.end()) + 1 : 0;
  int maxdx = 0;
  for (int s = 0; s < d.strands; ++s)
    maxdx = std::max(maxdx, std::abs(x[static_cast<std::size_t>(d.path[static_cast<std::size_t>(s)])] -
                                     x[static_cast<std::size_t>(s)]));
  int rows = std::clamp(maxdx / 2, 2, 40);

  std::vector<std::string> out;
  if (!d.caption.empty()) out.push_back(d.caption);
  std::vector<std::string> legend;
  if (d.style == DiagramStyle::beads) {
    std::string marks(static_cast<std::size_t>(width), ' ');
    bool any = false;
    for (int s = 0; s < d.strands; ++s) {
      if (d.beads[static_cast<std::size_t>(s)].empty()) continue;
      marks[static_cast<std::size_t>(x[static_cast<std::size_t>(s)])] = 'o';
      legend.push_back("bead " + std::to_string(s) + ": " + d.beads[static_cast<std::size_t>(s)]);
      any = true;
    }
    if (any) out.push_back(marks);
  } else if (d.style == DiagramStyle::twists) {
    std::string marks(static_cast<std::size_t>(width), ' ');
    for (int s = 0; s < d.strands; ++s) {
      std::string t = std::to_string(d.twist[static_cast<std::size_t>(s)]);
      auto at = static_cast<std::size_t>(x[static_cast<std::size_t>(s)]);
      if (marks.size() < at + t.size()) marks.resize(at + t.size(), ' ');
      marks.replace(at, t.size(), t);
    }
    out.push_back(marks);
    legend.push_back("twist unit 1/" + std::to_string(d.modulus));
  }
  for (int r = 0; r < rows; ++r) {
    std::string line(static_cast<std::size_t>(width), ' ');
    // r = 0 is the top row; strands are drawn from the bottom slot up.
    double f = (rows - 1 - r + 0.5) / rows;
    for (int s = 0; s < d.strands; ++s) {
      int x0 = x[static_cast<std::size_t>(s)];
      int x1 = x[static_cast<std::size_t>(d.path[static_cast<std::size_t>(s)])];
      auto col = static_cast<std::size_t>(std::lround(x0 + (x1 - x0) * f));
      char c = x0 == x1 ? '|' : (x1 > x0 ? '/' : '\\');
      line[col] = (line[col] == ' ' || line[col] == c) ? c : 'X';
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out.push_back(line);
  }
  if (d.style != DiagramStyle::bundles) {
    std::string foot(static_cast<std::size_t>(width) + 2, ' ');
    for (int s = 0; s < d.strands; ++s) {
      std::string t = std::to_string(s);
      foot.replace(static_cast<std::size_t>(x[static_cast<std::size_t>(s)]), t.size(), t);
    }
    while (!foot.empty() && foot.back() == ' ') foot.pop_back();
    out.push_back(foot);
  }
  for (auto& l : legend) out.push_back(l);
  std::string text;
  for (auto& l : out) text += l + "\n";
  return text;
}

}  // namespace

DiagramStyle parse_style(const std::string& s) {
  if (s == "beads") return DiagramStyle::beads;
  if (s == "twists") return DiagramStyle::twists;
  if (s == "bundles") return DiagramStyle::bundles;
  throw std::invalid_argument("unknown diagram style: " + s);
}

DiagramFormat parse_format(const std::string& s) {
  if (s == "svg") return DiagramFormat::svg;
  if (s == "ascii") return DiagramFormat::ascii;
  throw std::invalid_argument("unknown diagram format: " + s);
}

std::string to_string(DiagramStyle s) {
  switch (s) {
    case DiagramStyle::beads: return "beads";
    case DiagramStyle::twists: return "twists";
    case DiagramStyle::bundles: return "bundles";
  }
  return "?";
}

bool operator==(const DiagramSpec& a, const DiagramSpec& b) {
  return a.style == b.style && a.base == b.base && a.strands == b.strands && a.path == b.path && a.beads == b.beads &&
         a.generator == b.generator && a.modulus == b.modulus && a.twist == b.twist && a.ribbon == b.ribbon &&
         a.bundles == b.bundles;
}

DiagramSpec diagram_from_wreath(const WreathElem& w, DiagramStyle style, const std::string& caption) {
  require(w.base != nullptr, "diagram: wreath element without a base group");
  const auto& b = *w.base;
  DiagramSpec d;
  d.style = style;
  d.base = w.base;
  d.caption = caption;
  int n = w.arity();
  switch (style) {
    case DiagramStyle::beads:
      d.strands = n;
      d.path = w.top.images();
      for (int bead : w.beads) d.beads.push_back(bead == b.identity() ? "" : b.repr(bead));
      for (int s = 0; s < n; ++s) d.bundles.push_back({s});
      break;
    case DiagramStyle::twists: {
      d.strands = n;
      d.path = w.top.images();
      d.generator = twist_generator(b, w.beads);
      if (d.generator < 0) throw std::invalid_argument("diagram: twist style needs beads in a cyclic group");
      d.modulus = b.elem_order(d.generator);
      for (int bead : w.beads) d.twist.push_back(discrete_log(b, d.generator, bead));
      for (int s = 0; s < n; ++s) d.bundles.push_back({s});
      break;
    }
    case DiagramStyle::bundles: {
      auto reps = ribbon_perms(b);
      int m = reps.empty() ? 1 : reps.front().degree();
      d.ribbon = m;
      d.strands = n * m;
      d.path.assign(static_cast<std::size_t>(d.strands), 0);
      for (int i = 0; i < n; ++i) {
        int j = w.top(i);
        const Perm& r = reps[static_cast<std::size_t>(w.beads[static_cast<std::size_t>(j)])];
        for (int l = 0; l < m; ++l) d.path[static_cast<std::size_t>(i * m + l)] = j * m + r(l);
      }
      for (int i = 0; i < n; ++i) {
        std::vector<int> slots;
        for (int l = 0; l < m; ++l) slots.push_back(i * m + l);
        d.bundles.push_back(slots);
      }
      break;
    }
  }
  return d;
}

WreathElem extract(const DiagramSpec& d) {
  require(d.base != nullptr, "diagram: no base group");
  const auto& b = *d.base;
  Perm p = path_perm(d);
  WreathElem w;
  w.base = d.base;
  switch (d.style) {
    case DiagramStyle::beads: {
      require(static_cast<int>(d.beads.size()) == d.strands, "diagram: bead count");
      std::map<std::string, int> by_label;
      for (int x = 0; x < b.order(); ++x)
        if (x != b.identity()) require(by_label.emplace(b.repr(x), x).second, "diagram: bead labels are ambiguous");
      w.top = p;
      for (const auto& label : d.beads) {
        if (label.empty()) {
          w.beads.push_back(b.identity());
          continue;
        }
        auto it = by_label.find(label);
        require(it != by_label.end(), "diagram: unknown bead label");
        w.beads.push_back(it->second);
      }
      break;
    }
    case DiagramStyle::twists: {
      require(static_cast<int>(d.twist.size()) == d.strands, "diagram: twist count");
      require(d.generator >= 0 && d.generator < b.order() && b.elem_order(d.generator) == d.modulus,
              "diagram: twist unit");
      w.top = p;
      for (int t : d.twist) {
        require(t >= 0 && t < d.modulus, "diagram: twist not reduced");
        w.beads.push_back(b.pow(d.generator, t));
      }
      break;
    }
    case DiagramStyle::bundles: {
      auto reps = ribbon_perms(b);
      std::map<Perm, int> by_perm;
      for (int x = 0; x < b.order(); ++x) by_perm.emplace(reps[static_cast<std::size_t>(x)], x);
      int m = d.ribbon;
      int n = static_cast<int>(d.bundles.size());
      require(n * m == d.strands, "diagram: bundle sizes");
      std::vector<int> ribbon_of(static_cast<std::size_t>(d.strands), -1), pos(static_cast<std::size_t>(d.strands), -1);
      for (int i = 0; i < n; ++i) {
        require(static_cast<int>(d.bundles[static_cast<std::size_t>(i)].size()) == m, "diagram: bundle sizes");
        for (int l = 0; l < m; ++l) {
          int s = d.bundles[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)];
          require(s >= 0 && s < d.strands && ribbon_of[static_cast<std::size_t>(s)] < 0, "diagram: bundles overlap");
          ribbon_of[static_cast<std::size_t>(s)] = i;
          pos[static_cast<std::size_t>(s)] = l;
        }
      }
      std::vector<int> top(static_cast<std::size_t>(n));
      w.beads.assign(static_cast<std::size_t>(n), b.identity());
      for (int i = 0; i < n; ++i) {
        const auto& src = d.bundles[static_cast<std::size_t>(i)];
        int j = ribbon_of[static_cast<std::size_t>(p(src[0]))];
        std::vector<int> within(static_cast<std::size_t>(m));
        for (int l = 0; l < m; ++l) {
          int t = p(src[static_cast<std::size_t>(l)]);
          require(ribbon_of[static_cast<std::size_t>(t)] == j, "diagram: a ribbon splits");
          within[static_cast<std::size_t>(l)] = pos[static_cast<std::size_t>(t)];
        }
        auto it = by_perm.find(Perm(within));
        require(it != by_perm.end(), "diagram: ribbon permutation is not a base element");
        top[static_cast<std::size_t>(i)] = j;
        w.beads[static_cast<std::size_t>(j)] = it->second;
      }
      w.top = Perm(top);
      break;
    }
  }
  return w;
}

DiagramSpec stack(const DiagramSpec& top, const DiagramSpec& bottom) {
  require(top.style == bottom.style, "stack: styles differ");
  require(top.base == bottom.base, "stack: base groups differ");
  require(top.strands == bottom.strands && top.bundles == bottom.bundles && top.ribbon == bottom.ribbon,
          "stack: strand grouping differs");
  DiagramSpec d = top;
  d.caption = top.caption == bottom.caption ? top.caption : "";
  Perm pt = path_perm(top);
  Perm pb = path_perm(bottom);
  d.path = (pt * pb).images();
  switch (top.style) {
    case DiagramStyle::beads: {
      // Decorations follow the bottom strands up through the top diagram.
      WreathElem w = w_mul(extract(top), extract(bottom));
      const auto& b = *top.base;
      d.beads.clear();
      for (int bead : w.beads) d.beads.push_back(bead == b.identity() ? "" : b.repr(bead));
      break;
    }
    case DiagramStyle::twists:
      require(top.generator == bottom.generator && top.modulus == bottom.modulus, "stack: twist units differ");
      for (int i = 0; i < d.strands; ++i) {
        int below = bottom.twist[static_cast<std::size_t>(pt.inverse()(i))];
        d.twist[static_cast<std::size_t>(i)] = (top.twist[static_cast<std::size_t>(i)] + below) % d.modulus;
      }
      break;
    case DiagramStyle::bundles:
      break;
  }
  return d;
}

std::string render(const DiagramSpec& d, DiagramFormat format) {
  path_perm(d);
  return format == DiagramFormat::svg ? render_svg(d) : render_ascii(d);
}

}  // namespace bgw
