#include "narayana/output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <json.hpp>

namespace narayana::output {

namespace {

using json = nlohmann::json;

std::string fixed2(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

json certificate_json(const powers::PowerCertificate& c) {
    json j;
    j["rule"] = c.rule;
    j["a"] = c.a;
    if (c.b) j["b"] = *c.b;
    j["p"] = c.p;
    j["valuation"] = c.valuation;
    j["k_bound"] = c.k_bound;
    return j;  // keys serialize sorted
}

}  // namespace

std::string squares_csv(const std::vector<squares::SquareHit>& hits) {
    std::string out = "a,b,root\n";
    for (const auto& h : hits) {
        out += std::to_string(h.a);
        out += ',';
        out += std::to_string(h.b);
        out += ',';
        out += h.root.get_str();
        out += '\n';
    }
    return out;
}

std::string squares_json(const std::vector<squares::SquareHit>& hits) {
    json arr = json::array();
    for (const auto& h : hits) {
        json j;
        j["a"] = h.a;
        j["b"] = h.b;
        j["root"] = h.root.get_str();  // too large for a JSON number
        arr.push_back(j);
    }
    return arr.dump() + "\n";
}

std::string figure1_csv(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& rows) {
    std::string out = "a,b\n";
    for (const auto& [a, b] : rows) {
        out += std::to_string(a);
        out += ',';
        out += std::to_string(b);
        out += '\n';
    }
    return out;
}

std::string figure1_json(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& rows) {
    json arr = json::array();
    for (const auto& [a, b] : rows) arr.push_back(json{{"a", a}, {"b", b}});
    return arr.dump() + "\n";
}

std::string figure1_svg(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& rows,
                        std::uint64_t a_max) {
    const double W = 840, H = 560, L = 60, R = 20, T = 20, B = 45;
    double xmax = static_cast<double>(std::max<std::uint64_t>(a_max, 1));
    double ymax = static_cast<double>(std::max<std::uint64_t>(a_max / 2 + 1, 2));
    auto X = [&](double a) { return L + a / xmax * (W - L - R); };
    auto Y = [&](double b) { return H - B - b / ymax * (H - T - B); };

    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"840\" height=\"560\" "
         "viewBox=\"0 0 840 560\">\n";
    s += "<rect width=\"840\" height=\"560\" fill=\"white\"/>\n";
    s += "<line x1=\"" + fixed2(L) + "\" y1=\"" + fixed2(H - B) + "\" x2=\"" + fixed2(W - R) +
         "\" y2=\"" + fixed2(H - B) + "\" stroke=\"black\"/>\n";
    s += "<line x1=\"" + fixed2(L) + "\" y1=\"" + fixed2(H - B) + "\" x2=\"" + fixed2(L) +
         "\" y2=\"" + fixed2(T) + "\" stroke=\"black\"/>\n";
    s += "<text x=\"" + fixed2(W / 2) + "\" y=\"" + fixed2(H - 10) +
         "\" font-size=\"14\" text-anchor=\"middle\">a</text>\n";
    s += "<text x=\"18\" y=\"" + fixed2(H / 2) + "\" font-size=\"14\" text-anchor=\"middle\" "
         "transform=\"rotate(-90 18 " + fixed2(H / 2) + ")\">b</text>\n";
    s += "<text x=\"" + fixed2(L) + "\" y=\"" + fixed2(H - B + 18) +
         "\" font-size=\"12\" text-anchor=\"middle\">0</text>\n";
    s += "<text x=\"" + fixed2(W - R) + "\" y=\"" + fixed2(H - B + 18) +
         "\" font-size=\"12\" text-anchor=\"middle\">" + std::to_string(a_max) + "</text>\n";
    for (const auto& [a, b] : rows) {
        s += "<circle cx=\"" + fixed2(X(static_cast<double>(a))) + "\" cy=\"" +
             fixed2(Y(static_cast<double>(b))) + "\" r=\"2\" fill=\"#cc3333\"/>\n";
    }
    s += "</svg>\n";
    return s;
}

std::string figure2_csv(const std::vector<powers::Figure2Row>& rows) {
    std::string out = "a,thm1_threshold,thm2_threshold_sq_num,thm2_threshold_sq_den,stronger\n";
    for (const auto& r : rows) {
        out += std::to_string(r.a);
        out += ',';
        out += std::to_string(r.thm1_threshold);
        out += ',';
        out += std::to_string(r.thm2_sq_num);
        out += ',';
        out += std::to_string(r.thm2_sq_den);
        out += ',';
        out += r.stronger;
        out += '\n';
    }
    return out;
}

std::string figure2_json(const std::vector<powers::Figure2Row>& rows) {
    json arr = json::array();
    for (const auto& r : rows) {
        arr.push_back(json{{"a", r.a},
                           {"thm1_threshold", r.thm1_threshold},
                           {"thm2_threshold_sq_num", r.thm2_sq_num},
                           {"thm2_threshold_sq_den", r.thm2_sq_den},
                           {"stronger", r.stronger}});
    }
    return arr.dump() + "\n";
}

std::string figure2_svg(const std::vector<powers::Figure2Row>& rows, std::uint64_t a_max) {
    const double W = 840, H = 560, L = 60, R = 20, T = 20, B = 45;
    std::uint64_t tmax = 2;
    for (const auto& r : rows) tmax = std::max(tmax, r.thm1_threshold);
    double xmax = static_cast<double>(std::max<std::uint64_t>(a_max, 4));
    double curve_top = std::max(static_cast<double>(tmax), std::sqrt(xmax) / 1.95);
    double ymax = curve_top * 1.1 + 1;
    auto X = [&](double a) { return L + a / xmax * (W - L - R); };
    auto Y = [&](double t) { return H - B - t / ymax * (H - T - B); };

    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"840\" height=\"560\" "
         "viewBox=\"0 0 840 560\">\n";
    s += "<rect width=\"840\" height=\"560\" fill=\"white\"/>\n";
    s += "<line x1=\"" + fixed2(L) + "\" y1=\"" + fixed2(H - B) + "\" x2=\"" + fixed2(W - R) +
         "\" y2=\"" + fixed2(H - B) + "\" stroke=\"black\"/>\n";
    s += "<line x1=\"" + fixed2(L) + "\" y1=\"" + fixed2(H - B) + "\" x2=\"" + fixed2(L) +
         "\" y2=\"" + fixed2(T) + "\" stroke=\"black\"/>\n";
    s += "<text x=\"" + fixed2(W / 2) + "\" y=\"" + fixed2(H - 10) +
         "\" font-size=\"14\" text-anchor=\"middle\">a</text>\n";
    // reference curve sqrt(a)/1.95 (presentation only; certificates never use floats)
    s += "<polyline fill=\"none\" stroke=\"#2a8f2a\" stroke-width=\"1.5\" points=\"";
    const int samples = 200;
    for (int i = 0; i <= samples; ++i) {
        double a = xmax * i / samples;
        if (i) s += ' ';
        s += fixed2(X(a)) + "," + fixed2(Y(std::sqrt(a) / 1.95));
    }
    s += "\"/>\n";
    for (const auto& r : rows) {
        s += "<circle cx=\"" + fixed2(X(static_cast<double>(r.a))) + "\" cy=\"" +
             fixed2(Y(static_cast<double>(r.thm1_threshold))) + "\" r=\"1.5\" fill=\"#cc3333\"/>\n";
    }
    s += "</svg>\n";
    return s;
}

std::string certificates_json(const std::vector<powers::PowerCertificate>& certs) {
    json arr = json::array();
    for (const auto& c : certs) arr.push_back(certificate_json(c));
    return arr.dump() + "\n";
}

std::string certificates_csv(const std::vector<powers::PowerCertificate>& certs) {
    std::string out = "rule,a,b,p,valuation,k_bound\n";
    for (const auto& c : certs) {
        out += c.rule;
        out += ',';
        out += std::to_string(c.a);
        out += ',';
        out += c.b ? std::to_string(*c.b) : std::string();
        out += ',';
        out += std::to_string(c.p);
        out += ',';
        out += std::to_string(c.valuation);
        out += ',';
        out += std::to_string(c.k_bound);
        out += '\n';
    }
    return out;
}

std::string scan_json(const powers::ScanReport& report) {
    json j;
    j["a_max"] = report.a_max;
    j["square_hits"] = report.square_hits;
    json hits = json::array();
    for (const auto& [a, b, g] : report.higher_power_hits)
        hits.push_back(json{{"a", a}, {"b", b}, {"exponent_gcd", g}});
    j["higher_power_hits"] = hits;
    return j.dump() + "\n";
}

std::string scan_csv(const powers::ScanReport& report) {
    std::string out = "a,b,exponent_gcd\n";
    for (const auto& [a, b, g] : report.higher_power_hits) {
        out += std::to_string(a);
        out += ',';
        out += std::to_string(b);
        out += ',';
        out += std::to_string(g);
        out += '\n';
    }
    out += "# a_max=" + std::to_string(report.a_max) +
           " square_pairs=" + std::to_string(report.square_hits) +
           " higher_power_pairs=" + std::to_string(report.higher_power_hits.size()) + "\n";
    return out;
}

std::string crosscheck_comment(const squares::CrosscheckReport& report) {
    auto join = [](const std::vector<std::uint64_t>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ' ';
            s += std::to_string(v[i]);
        }
        return s.empty() ? std::string("(none)") : s;
    };
    std::string out;
    out += "# crosscheck b=" + std::to_string(report.b) +
           " a_limit=" + std::to_string(report.a_limit) + "\n";
    out += "# pell:   " + join(report.pell_as) + "\n";
    out += "# oracle: " + join(report.oracle_as) + "\n";
    out += std::string("# equal: ") + (report.equal ? "yes" : "NO - DISCREPANCY") + "\n";
    return out;
}

}  // namespace narayana::output
