#include "ajcactus/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace ajcactus {

namespace {

// Layout configuration (all coordinates derive from these).
constexpr double kStrandSpacing = 40.0;  // horizontal pitch between strands
constexpr double kBandHeight = 70.0;     // vertical pitch per letter
constexpr double kStubHeight = 30.0;     // straight lead-in / lead-out
constexpr double kSidePad = 16.0;        // viewport padding outside the seam
constexpr double kNodeRadius = 4.5;
constexpr const char* kDash = "7,5";

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  return buf;
}

struct Canvas {
  std::ostringstream out;
  int n;
  double x(double slot) const { return kSidePad + (slot - 0.5) * kStrandSpacing; }
  double seam() const { return kSidePad + n * kStrandSpacing; }

  void line(double x1, double y1, double x2, double y2, bool wrap) {
    out << "<line x1=\"" << num(x1) << "\" y1=\"" << num(y1) << "\" x2=\"" << num(x2) << "\" y2=\""
        << num(y2) << "\"" << (wrap ? " class=\"strand wrap\" stroke-dasharray=\"" + std::string(kDash) + "\""
                                    : " class=\"strand\"")
        << "/>\n";
  }

  void crossing_path(double a, double c, double b, double y0, double ymid, double y1, bool wrap) {
    out << "<polyline points=\"" << num(x(a)) << ',' << num(y0) << ' ' << num(x(c)) << ',' << num(ymid)
        << ' ' << num(x(b)) << ',' << num(y1) << "\""
        << (wrap ? " class=\"strand wrap\" stroke-dasharray=\"" + std::string(kDash) + "\""
                 : " class=\"strand\"")
        << "/>\n";
  }
};

}  // namespace

std::string render_cactus_svg(const CactusWord& w) {
  const int n = w.n();
  const auto k = static_cast<int>(w.size());
  const double width = 2 * kSidePad + n * kStrandSpacing;
  const double height = 2 * kStubHeight + k * kBandHeight;

  Canvas cv;
  cv.n = n;
  cv.out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 " << num(width)
         << ' ' << num(height) << "\" width=\"" << num(width) << "\" height=\"" << num(height) << "\">\n";
  cv.out << "<style>.strand{stroke:#222;stroke-width:2;fill:none}.seam{stroke:#999;stroke-width:1}"
            ".node{fill:#222}text{font:12px sans-serif;fill:#555;text-anchor:middle}</style>\n";
  cv.out << "<defs><clipPath id=\"cyl\"><rect x=\"" << num(kSidePad) << "\" y=\"0\" width=\""
         << num(n * kStrandSpacing) << "\" height=\"" << num(height) << "\"/></clipPath></defs>\n";

  // identified left/right edges of the cylinder
  cv.out << "<line class=\"seam\" x1=\"" << num(kSidePad) << "\" y1=\"0\" x2=\"" << num(kSidePad)
         << "\" y2=\"" << num(height) << "\"/>\n";
  cv.out << "<line class=\"seam\" x1=\"" << num(cv.seam()) << "\" y1=\"0\" x2=\"" << num(cv.seam())
         << "\" y2=\"" << num(height) << "\"/>\n";

  for (int p = 1; p <= n; ++p)
    cv.out << "<text x=\"" << num(cv.x(p)) << "\" y=\"" << num(14.0) << "\">" << p << "</text>\n";

  cv.out << "<g clip-path=\"url(#cyl)\">\n";
  for (int p = 1; p <= n; ++p) {
    cv.line(cv.x(p), 16.0, cv.x(p), kStubHeight, false);
    cv.line(cv.x(p), height - kStubHeight, cv.x(p), height, false);
  }

  for (int t = 0; t < k; ++t) {
    const CactusLetter l = w.letters()[static_cast<std::size_t>(t)];
    const CircularInterval iv = letter_support(n, l);
    const int len = iv.size();
    const double y0 = kStubHeight + t * kBandHeight;
    const double y1 = y0 + kBandHeight;
    const double ymid = y0 + kBandHeight / 2;
    const double center = l.i + (len - 1) / 2.0;  // virtual slot of the node

    cv.out << "<!-- letter " << (t + 1) << ": s(" << l.i << "," << l.j << ") -->\n";
    for (int p = 1; p <= n; ++p) {
      if (!iv.contains(p)) {
        cv.line(cv.x(p), y0, cv.x(p), y1, false);
        continue;
      }
      const int off = ((p - l.i) % n + n) % n;
      const double a = l.i + off;              // source slot, virtual
      const double b = l.i + (len - 1 - off);  // mirrored target slot
      const double lo = std::min(std::min(a, b), center);
      const double hi = std::max(std::max(a, b), center);
      const bool wrap = lo < n + 0.5 && hi > n + 0.5;
      if (lo < n + 0.5) cv.crossing_path(a, center, b, y0, ymid, y1, wrap);
      if (hi > n + 0.5) cv.crossing_path(a - n, center - n, b - n, y0, ymid, y1, wrap);
    }
    const double node_slot = center < n + 0.5 ? center : center - n;
    cv.out << "<circle class=\"node\" cx=\"" << num(cv.x(node_slot)) << "\" cy=\"" << num(ymid)
           << "\" r=\"" << num(kNodeRadius) << "\"/>\n";
  }
  cv.out << "</g>\n</svg>\n";
  return cv.out.str();
}

}  // namespace ajcactus
