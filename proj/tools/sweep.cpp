// Copyright 2026 The atanbounds Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sweep.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace atanbounds::cli {

std::string format_number(double value) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
  return std::string(buf, end);
}

std::vector<SweepRow> compute_sweep(double lo, double hi, std::size_t n, atb_grid grid) {
  std::size_t count = 0;
  if (atb_make_grid(lo, hi, n, grid, nullptr, 0, &count) != ATB_OK) {
    throw std::invalid_argument(atb_last_error());
  }
  std::vector<double> xs(count);
  if (atb_make_grid(lo, hi, n, grid, xs.data(), xs.size(), &count) != ATB_OK) {
    throw std::runtime_error(atb_last_error());
  }
  std::vector<SweepRow> rows;
  rows.reserve(xs.size());
  for (const double x : xs) {
    atb_sample s;
    atb_evaluate_sample(x, &s);
    rows.push_back({s.x, s.f, s.g, s.h, s.r_f, s.r_h, s.env_max, s.env_min});
  }
  return rows;
}

void write_sweep_csv(std::span<const SweepRow> rows, std::ostream& out) {
  out << kSweepHeader << '\n';
  for (const SweepRow& r : rows) {
    out << format_number(r.x) << ',' << format_number(r.f) << ',' << format_number(r.g) << ','
        << format_number(r.h) << ',' << format_number(r.r_f) << ',' << format_number(r.r_h) << ','
        << format_number(r.env_max) << ',' << format_number(r.env_min) << '\n';
  }
}

namespace {

constexpr double kWidth = 720;
constexpr double kPanelHeight = 300;
constexpr double kMarginLeft = 80;
constexpr double kMarginRight = 150;
constexpr double kMarginTop = 30;
constexpr double kGap = 60;

struct Series {
  const char* label;
  const char* colour;
  double SweepRow::*field;
};

struct Panel {
  double top;
  double y_lo;
  double y_hi;
};

class Canvas {
 public:
  Canvas(std::span<const SweepRow> rows, bool log_x) : rows_(rows), log_x_(log_x) {
    x_lo_ = transform_x(rows.front().x);
    x_hi_ = transform_x(rows.back().x);
    if (x_hi_ == x_lo_) x_hi_ = x_lo_ + 1;
  }

  double px(double x) const {
    const double plot_width = kWidth - kMarginLeft - kMarginRight;
    return kMarginLeft + (transform_x(x) - x_lo_) / (x_hi_ - x_lo_) * plot_width;
  }

  static double py(const Panel& p, double y) {
    return p.top + kPanelHeight - (y - p.y_lo) / (p.y_hi - p.y_lo) * kPanelHeight;
  }

  void draw_panel(std::ostream& out, const Panel& panel, std::span<const Series> series,
                  const char* title) const {
    const double right = kWidth - kMarginRight;
    out << "<rect x=\"" << kMarginLeft << "\" y=\"" << panel.top << "\" width=\""
        << right - kMarginLeft << "\" height=\"" << kPanelHeight
        << "\" fill=\"none\" stroke=\"black\"/>\n";
    out << "<text x=\"" << kMarginLeft << "\" y=\"" << panel.top - 8 << "\" font-size=\"13\">"
        << title << "</text>\n";
    for (int i = 0; i <= 4; ++i) {
      const double frac = i / 4.0;
      const double y = panel.y_lo + frac * (panel.y_hi - panel.y_lo);
      const double yy = py(panel, y);
      out << "<line x1=\"" << kMarginLeft - 4 << "\" y1=\"" << yy << "\" x2=\"" << kMarginLeft
          << "\" y2=\"" << yy << "\" stroke=\"black\"/>\n";
      out << "<text x=\"" << kMarginLeft - 6 << "\" y=\"" << yy + 4
          << "\" font-size=\"10\" text-anchor=\"end\">" << short_number(y) << "</text>\n";
      const double xv = inverse_x(x_lo_ + frac * (x_hi_ - x_lo_));
      const double xx = px(xv);
      const double bottom = panel.top + kPanelHeight;
      out << "<line x1=\"" << xx << "\" y1=\"" << bottom << "\" x2=\"" << xx << "\" y2=\""
          << bottom + 4 << "\" stroke=\"black\"/>\n";
      out << "<text x=\"" << xx << "\" y=\"" << bottom + 16
          << "\" font-size=\"10\" text-anchor=\"middle\">" << short_number(xv) << "</text>\n";
    }
    double legend_y = panel.top + 14;
    for (const Series& s : series) {
      out << "<polyline fill=\"none\" stroke=\"" << s.colour << "\" stroke-width=\"1.2\" points=\"";
      for (const SweepRow& r : rows_) {
        if (log_x_ && !(r.x > 0)) continue;
        out << px(r.x) << ',' << py(panel, r.*(s.field)) << ' ';
      }
      out << "\"/>\n";
      out << "<line x1=\"" << right + 10 << "\" y1=\"" << legend_y - 4 << "\" x2=\"" << right + 30
          << "\" y2=\"" << legend_y - 4 << "\" stroke=\"" << s.colour << "\"/>\n";
      out << "<text x=\"" << right + 35 << "\" y=\"" << legend_y << "\" font-size=\"11\">"
          << s.label << "</text>\n";
      legend_y += 16;
    }
  }

 private:
  double transform_x(double x) const { return log_x_ ? std::log10(x) : x; }
  double inverse_x(double t) const { return log_x_ ? std::pow(10.0, t) : t; }

  static std::string short_number(double v) {
    char buf[32];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 4);
    return ec == std::errc{} ? std::string(buf, end) : std::string("?");
  }

  std::span<const SweepRow> rows_;
  bool log_x_;
  double x_lo_;
  double x_hi_;
};

Panel fit_panel(std::span<const SweepRow> rows, std::span<const Series> series, double top,
                bool log_x) {
  double lo = INFINITY;
  double hi = -INFINITY;
  for (const SweepRow& r : rows) {
    if (log_x && !(r.x > 0)) continue;
    for (const Series& s : series) {
      const double v = r.*(s.field);
      if (!std::isfinite(v)) continue;
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  if (!(lo < hi)) {
    lo = std::isfinite(lo) ? lo - 1 : 0;
    hi = lo + 2;
  }
  return {top, lo, hi};
}

}  // namespace

void write_sweep_svg(std::span<const SweepRow> rows, bool log_x, std::ostream& out) {
  if (rows.empty()) throw std::invalid_argument("nothing to plot");
  log_x = log_x && std::any_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.x > 0; });
  std::vector<SweepRow> kept;
  for (const SweepRow& r : rows) {
    if (!log_x || r.x > 0) kept.push_back(r);
  }

  static constexpr std::array<Series, 3> bounds{{{"f (lower)", "#1f77b4", &SweepRow::f},
                                                 {"arctan", "#000000", &SweepRow::g},
                                                 {"h (upper)", "#d62728", &SweepRow::h}}};
  static constexpr std::array<Series, 4> errors{{{"r_f", "#1f77b4", &SweepRow::r_f},
                                                 {"r_h", "#d62728", &SweepRow::r_h},
                                                 {"(h-f)/f", "#2ca02c", &SweepRow::env_max},
                                                 {"(h-f)/(h+f)", "#9467bd", &SweepRow::env_min}}};

  const double height = kMarginTop + 2 * kPanelHeight + kGap + 40;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << height
      << "\" font-family=\"sans-serif\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  const Canvas canvas(kept, log_x);
  const Panel top = fit_panel(kept, bounds, kMarginTop, log_x);
  const Panel bottom = fit_panel(kept, errors, kMarginTop + kPanelHeight + kGap, log_x);
  canvas.draw_panel(out, top, bounds, "arctan and its bounds");
  canvas.draw_panel(out, bottom, errors, "relative errors and envelopes");
  out << "</svg>\n";
}

}  // namespace atanbounds::cli
