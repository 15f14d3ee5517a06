#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

namespace sindy {

// Minimal static SVG renderer: polyline charts with axes and a shaded-grid
// heatmap. Enough to display result files; not a plotting library.

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

struct ChartOptions {
  int width = 640;
  int height = 420;
  std::string title;
  std::string x_label = "x";
  std::string y_label = "y";
  bool log_x = false;
  bool log_y = false;
  // Reference guide lines with the given slopes through the data's anchor
  // point (log-log charts only).
  std::vector<double> reference_slopes;
};

namespace svg_detail {

inline const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                 "#ff7f0e", "#8c564b", "#e377c2", "#7f7f7f",
                                 "#bcbd22", "#17becf"};

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace svg_detail

inline std::string render_line_chart(const std::vector<Series>& series,
                                     const ChartOptions& opt = {}) {
  const double ml = 60, mr = 20, mt = opt.title.empty() ? 20 : 40, mb = 50;
  const double pw = opt.width - ml - mr, ph = opt.height - mt - mb;

  auto tx = [&](double v) { return opt.log_x ? std::log10(v) : v; };
  auto ty = [&](double v) { return opt.log_y ? std::log10(v) : v; };

  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const auto& s : series)
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if ((opt.log_x && s.x[i] <= 0) || (opt.log_y && s.y[i] <= 0)) continue;
      xmin = std::min(xmin, tx(s.x[i]));
      xmax = std::max(xmax, tx(s.x[i]));
      ymin = std::min(ymin, ty(s.y[i]));
      ymax = std::max(ymax, ty(s.y[i]));
    }
  if (!(xmax > xmin)) xmax = xmin + 1;
  if (!(ymax > ymin)) ymax = ymin + 1;

  auto px = [&](double v) { return ml + (tx(v) - xmin) / (xmax - xmin) * pw; };
  auto py = [&](double v) { return mt + ph - (ty(v) - ymin) / (ymax - ymin) * ph; };

  std::string out;
  out += "<svg xmlns='http://www.w3.org/2000/svg' width='" +
         std::to_string(opt.width) + "' height='" + std::to_string(opt.height) +
         "' font-family='sans-serif' font-size='12'>\n";
  out += "<rect width='100%' height='100%' fill='white'/>\n";
  if (!opt.title.empty())
    out += "<text x='" + svg_detail::num(opt.width / 2.0) +
           "' y='20' text-anchor='middle' font-size='15'>" + opt.title +
           "</text>\n";

  // axes + ticks
  out += "<line x1='" + svg_detail::num(ml) + "' y1='" + svg_detail::num(mt + ph) +
         "' x2='" + svg_detail::num(ml + pw) + "' y2='" + svg_detail::num(mt + ph) +
         "' stroke='black'/>\n";
  out += "<line x1='" + svg_detail::num(ml) + "' y1='" + svg_detail::num(mt) +
         "' x2='" + svg_detail::num(ml) + "' y2='" + svg_detail::num(mt + ph) +
         "' stroke='black'/>\n";
  for (int i = 0; i <= 5; ++i) {
    const double fx = xmin + (xmax - xmin) * i / 5.0;
    const double fy = ymin + (ymax - ymin) * i / 5.0;
    const double gx = ml + pw * i / 5.0, gy = mt + ph - ph * i / 5.0;
    out += "<text x='" + svg_detail::num(gx) + "' y='" +
           svg_detail::num(mt + ph + 16) + "' text-anchor='middle'>" +
           svg_detail::num(fx) + (opt.log_x ? " (log)" : "") + "</text>\n";
    out += "<text x='" + svg_detail::num(ml - 6) + "' y='" +
           svg_detail::num(gy + 4) + "' text-anchor='end'>" + svg_detail::num(fy) +
           "</text>\n";
  }
  out += "<text x='" + svg_detail::num(ml + pw / 2) + "' y='" +
         svg_detail::num(mt + ph + 36) + "' text-anchor='middle'>" + opt.x_label +
         "</text>\n";
  out += "<text x='14' y='" + svg_detail::num(mt + ph / 2) +
         "' text-anchor='middle' transform='rotate(-90 14 " +
         svg_detail::num(mt + ph / 2) + ")'>" + opt.y_label + "</text>\n";

  for (double slope : opt.reference_slopes) {
    // anchor the guide at the data window's lower-left corner
    std::string pts = svg_detail::num(ml) + "," + svg_detail::num(mt + ph) + " ";
    const double y_end = ymin + slope * (xmax - xmin);
    const double cy = mt + ph - std::clamp((y_end - ymin) / (ymax - ymin), 0.0, 1.0) * ph;
    const double cx = y_end > ymax ? ml + pw * (ymax - ymin) / (slope * (xmax - xmin)) : ml + pw;
    pts += svg_detail::num(cx) + "," + svg_detail::num(cy);
    out += "<polyline points='" + pts +
           "' fill='none' stroke='#aaaaaa' stroke-dasharray='5,4'/>\n";
    out += "<text x='" + svg_detail::num(cx - 40) + "' y='" +
           svg_detail::num(cy + 12) + "' fill='#888888'>slope " +
           svg_detail::num(slope) + "</text>\n";
  }

  for (std::size_t s = 0; s < series.size(); ++s) {
    const char* color = svg_detail::kPalette[s % 10];
    std::string pts;
    for (std::size_t i = 0; i < series[s].x.size(); ++i) {
      if ((opt.log_x && series[s].x[i] <= 0) || (opt.log_y && series[s].y[i] <= 0))
        continue;
      pts += svg_detail::num(px(series[s].x[i])) + "," +
             svg_detail::num(py(series[s].y[i])) + " ";
    }
    out += "<polyline points='" + pts + "' fill='none' stroke='" + color +
           "' stroke-width='1.5'/>\n";
    out += "<text x='" + svg_detail::num(ml + pw - 4) + "' y='" +
           svg_detail::num(mt + 14.0 * (s + 1)) + "' text-anchor='end' fill='" +
           color + "'>" + series[s].label + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

// |value|-shaded grid, row/column labels on the edges.
inline std::string render_heatmap(const std::vector<std::string>& row_labels,
                                  const std::vector<std::string>& col_labels,
                                  const std::vector<std::vector<double>>& values,
                                  const std::string& title = "") {
  const double cell = 34, ml = 110, mt = title.empty() ? 30 : 50;
  const int rows = static_cast<int>(row_labels.size());
  const int cols = static_cast<int>(col_labels.size());
  double vmax = 0.0;
  for (const auto& row : values)
    for (double v : row) vmax = std::max(vmax, std::abs(v));
  if (vmax == 0.0) vmax = 1.0;

  const int width = static_cast<int>(ml + cols * cell + 20);
  const int height = static_cast<int>(mt + rows * cell + 40);
  std::string out = "<svg xmlns='http://www.w3.org/2000/svg' width='" +
                    std::to_string(width) + "' height='" + std::to_string(height) +
                    "' font-family='sans-serif' font-size='11'>\n";
  out += "<rect width='100%' height='100%' fill='white'/>\n";
  if (!title.empty())
    out += "<text x='" + svg_detail::num(width / 2.0) +
           "' y='24' text-anchor='middle' font-size='14'>" + title + "</text>\n";
  for (int r = 0; r < rows; ++r) {
    out += "<text x='" + svg_detail::num(ml - 6) + "' y='" +
           svg_detail::num(mt + r * cell + cell * 0.65) + "' text-anchor='end'>" +
           row_labels[r] + "</text>\n";
    for (int c = 0; c < cols; ++c) {
      const double mag = std::abs(values[r][c]) / vmax;
      const int shade = static_cast<int>(255 - 225 * mag);
      out += "<rect x='" + svg_detail::num(ml + c * cell) + "' y='" +
             svg_detail::num(mt + r * cell) + "' width='" + svg_detail::num(cell - 2) +
             "' height='" + svg_detail::num(cell - 2) + "' fill='rgb(" +
             std::to_string(shade) + "," + std::to_string(shade) + ",255)'/>\n";
    }
  }
  for (int c = 0; c < cols; ++c)
    out += "<text x='" + svg_detail::num(ml + c * cell + cell / 2) + "' y='" +
           svg_detail::num(mt + rows * cell + 16) + "' text-anchor='middle'>" +
           col_labels[c] + "</text>\n";
  out += "</svg>\n";
  return out;
}

}  // namespace sindy
