#pragma once

#include <complex>
#include <string>
#include <vector>

namespace maxmod {

// Minimal static SVG writer over world coordinates (y axis pointing up).
class SvgCanvas {
 public:
  SvgCanvas(double x0, double x1, double y0, double y1, int width_px = 900);

  void line(double xa, double ya, double xb, double yb,
            const std::string& color = "#000", double width = 1.0);
  void polyline(const std::vector<std::complex<double>>& pts,
                const std::string& color = "#000", double width = 1.0);
  void rect_outline(double x0, double x1, double y0, double y1,
                    const std::string& color = "#000", double width = 1.0);
  void fill_rect(double x0, double x1, double y0, double y1,
                 const std::string& fill);
  void marker(double x, double y, const std::string& color = "#c00",
              double radius_px = 3.0);
  void text(double x, double y, const std::string& s, int px = 12);

  std::string str() const;
  void save(const std::string& path) const;

 private:
  double px(double x) const;
  double py(double y) const;
  double x0_, x1_, y0_, y1_;
  int w_, h_;
  std::string body_;
};

std::string gray_fill(double v01);  // 0 -> black, 1 -> white

}  // namespace maxmod
