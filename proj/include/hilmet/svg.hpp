#pragma once

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "hilmet/errors.hpp"
#include "hilmet/point.hpp"

namespace hilmet {

// Minimal self-contained SVG writer with a fixed palette: domain outlines
// black, metric curves blue, guides dashed gray. World y points up, SVG y
// points down; all emitted coordinates use six decimals.
class SvgWriter {
  public:
    enum class Style { domain, curve, guide };

    SvgWriter(double xmin, double xmax, double ymin, double ymax, int width_px = 640)
        : xmin_(xmin),
          ymax_(ymax),
          scale_(width_px / (xmax - xmin)),
          width_(width_px),
          height_(static_cast<int>(std::lround(width_px * (ymax - ymin) / (xmax - xmin)))) {
        if (!(xmax > xmin) || !(ymax > ymin)) throw Error("SvgWriter: empty world box");
    }

    void polyline(const std::vector<cplx>& pts, bool closed, Style style) {
        if (pts.size() < 2) return;
        body_ << (closed ? "  <polygon points=\"" : "  <polyline points=\"");
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (i) body_ << ' ';
            body_ << px(pts[i].real()) << ',' << py(pts[i].imag());
        }
        body_ << "\" " << attrs(style) << "/>\n";
    }

    void segment(cplx p, cplx q, Style style) {
        body_ << "  <line x1=\"" << px(p.real()) << "\" y1=\"" << py(p.imag())
              << "\" x2=\"" << px(q.real()) << "\" y2=\"" << py(q.imag()) << "\" "
              << attrs(style) << "/>\n";
    }

    void circle(cplx center, double radius, Style style) {
        body_ << "  <circle cx=\"" << px(center.real()) << "\" cy=\"" << py(center.imag())
              << "\" r=\"" << num(radius * scale_) << "\" " << attrs(style) << "/>\n";
    }

    void ellipse(cplx center, double rx, double ry, double angle_deg, Style style) {
        body_ << "  <ellipse cx=\"0\" cy=\"0\" rx=\"" << num(rx * scale_) << "\" ry=\""
              << num(ry * scale_) << "\" " << attrs(style) << " transform=\"translate("
              << px(center.real()) << ' ' << py(center.imag()) << ") rotate("
              << num(-angle_deg) << ")\"/>\n";
    }

    void dot(cplx p) {
        body_ << "  <circle cx=\"" << px(p.real()) << "\" cy=\"" << py(p.imag())
              << "\" r=\"3\" fill=\"black\" stroke=\"none\"/>\n";
    }

    void label(cplx p, const std::string& text) {
        body_ << "  <text x=\"" << px(p.real() ) << "\" y=\"" << py(p.imag())
              << "\" font-size=\"12\" fill=\"#333333\" dx=\"5\" dy=\"-5\">" << text
              << "</text>\n";
    }

    std::string str() const {
        std::ostringstream out;
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width_
            << "\" height=\"" << height_ << "\" viewBox=\"0 0 " << width_ << ' ' << height_
            << "\">\n  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
            << body_.str() << "</svg>\n";
        return out.str();
    }

  private:
    static std::string num(double v) {
        char buf[48];
        std::snprintf(buf, sizeof buf, "%.6f", v);
        return buf;
    }
    std::string px(double x) const { return num((x - xmin_) * scale_); }
    std::string py(double y) const { return num((ymax_ - y) * scale_); }
    static const char* attrs(Style s) {
        switch (s) {
            case Style::domain: return "fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"";
            case Style::curve: return "fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\"";
            case Style::guide:
                return "fill=\"none\" stroke=\"#888888\" stroke-width=\"1\" stroke-dasharray=\"4 3\"";
        }
        return "";
    }

    double xmin_, ymax_, scale_;
    int width_, height_;
    std::ostringstream body_;
};

}  // namespace hilmet
