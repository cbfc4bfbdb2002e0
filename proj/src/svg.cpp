#include "maxmod/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "maxmod/csv.hpp"

namespace maxmod {

namespace {
std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}
}  // namespace

SvgCanvas::SvgCanvas(double x0, double x1, double y0, double y1, int width_px)
    : x0_(x0), x1_(x1), y0_(y0), y1_(y1), w_(width_px) {
  double aspect = (y1 - y0) / (x1 - x0);
  h_ = std::max(60, static_cast<int>(std::lround(width_px * aspect)));
}

double SvgCanvas::px(double x) const { return (x - x0_) / (x1_ - x0_) * w_; }
double SvgCanvas::py(double y) const { return (y1_ - y) / (y1_ - y0_) * h_; }

void SvgCanvas::line(double xa, double ya, double xb, double yb,
                     const std::string& color, double width) {
  body_ += "<line x1=\"" + num(px(xa)) + "\" y1=\"" + num(py(ya)) + "\" x2=\"" +
           num(px(xb)) + "\" y2=\"" + num(py(yb)) + "\" stroke=\"" + color +
           "\" stroke-width=\"" + num(width) + "\"/>\n";
}

void SvgCanvas::polyline(const std::vector<std::complex<double>>& pts,
                         const std::string& color, double width) {
  if (pts.size() < 2) return;
  body_ += "<polyline fill=\"none\" stroke=\"" + color + "\" stroke-width=\"" +
           num(width) + "\" points=\"";
  for (const auto& p : pts) {
    body_ += num(px(p.real())) + "," + num(py(p.imag())) + " ";
  }
  body_ += "\"/>\n";
}

void SvgCanvas::rect_outline(double x0, double x1, double y0, double y1,
                             const std::string& color, double width) {
  body_ += "<rect x=\"" + num(px(x0)) + "\" y=\"" + num(py(y1)) + "\" width=\"" +
           num(px(x1) - px(x0)) + "\" height=\"" + num(py(y0) - py(y1)) +
           "\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"" +
           num(width) + "\"/>\n";
}

void SvgCanvas::fill_rect(double x0, double x1, double y0, double y1,
                          const std::string& fill) {
  body_ += "<rect x=\"" + num(px(x0)) + "\" y=\"" + num(py(y1)) + "\" width=\"" +
           num(px(x1) - px(x0)) + "\" height=\"" + num(py(y0) - py(y1)) +
           "\" fill=\"" + fill + "\" stroke=\"none\"/>\n";
}

void SvgCanvas::marker(double x, double y, const std::string& color,
                       double radius_px) {
  body_ += "<circle cx=\"" + num(px(x)) + "\" cy=\"" + num(py(y)) + "\" r=\"" +
           num(radius_px) + "\" fill=\"" + color + "\"/>\n";
}

void SvgCanvas::text(double x, double y, const std::string& s, int pxsize) {
  body_ += "<text x=\"" + num(px(x)) + "\" y=\"" + num(py(y)) + "\" font-size=\"" +
           std::to_string(pxsize) + "\" font-family=\"monospace\">" + s +
           "</text>\n";
}

std::string SvgCanvas::str() const {
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                    std::to_string(w_) + "\" height=\"" + std::to_string(h_) +
                    "\" viewBox=\"0 0 " + std::to_string(w_) + " " +
                    std::to_string(h_) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += body_;
  out += "</svg>\n";
  return out;
}

void SvgCanvas::save(const std::string& path) const { write_text_file(path, str()); }

std::string gray_fill(double v01) {
  int g = static_cast<int>(std::lround(std::clamp(v01, 0.0, 1.0) * 255.0));
  char buf[20];
  std::snprintf(buf, sizeof(buf), "rgb(%d,%d,%d)", g, g, g);
  return buf;
}

}  // namespace maxmod
