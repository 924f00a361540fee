#include "ladm/serialization.hpp"

#include <cstdio>
#include <map>

namespace ladm {

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

nlohmann::json series_to_json(const TimeSeries& series) {
    nlohmann::json powers = nlohmann::json::array();
    for (int m = 0; m <= series.degree(); ++m) {
        const HarmonicPoly& p = series.coeff(m);
        if (p.is_zero()) {
            continue;
        }
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [k, c] : p.terms()) {
            terms.push_back({{"k", k}, {"re", c.real()}, {"im", c.imag()}});
        }
        powers.push_back({{"power_t", m}, {"terms", std::move(terms)}});
    }
    return powers;
}

TimeSeries series_from_json(const nlohmann::json& j) {
    int degree = -1;
    for (const auto& entry : j) {
        degree = std::max(degree, entry.at("power_t").get<int>());
    }
    std::vector<HarmonicPoly> coeffs(degree + 1);
    for (const auto& entry : j) {
        std::map<int, Complex> terms;
        for (const auto& term : entry.at("terms")) {
            terms[term.at("k").get<int>()] =
                Complex{term.at("re").get<double>(), term.at("im").get<double>()};
        }
        coeffs[entry.at("power_t").get<int>()] = HarmonicPoly{std::move(terms)};
    }
    return TimeSeries{std::move(coeffs)};
}

nlohmann::json run_to_json(const LadmRun& run) {
    nlohmann::json iterates = nlohmann::json::array();
    for (const auto& u : run.iterates) {
        iterates.push_back(series_to_json(u));
    }
    return {{"beta", run.beta},
            {"harmonic", run.harmonic},
            {"correction_terms", run.correction_terms},
            {"iterates", std::move(iterates)},
            {"truncated", series_to_json(run.truncated)}};
}

LadmRun run_from_json(const nlohmann::json& j) {
    LadmRun run;
    run.beta = j.at("beta").get<double>();
    run.harmonic = j.at("harmonic").get<int>();
    run.correction_terms = j.at("correction_terms").get<int>();
    for (const auto& u : j.at("iterates")) {
        run.iterates.push_back(series_from_json(u));
    }
    run.truncated = series_from_json(j.at("truncated"));
    return run;
}

namespace {

void write_row(std::ostream& out, const ComparisonRow& row) {
    out << format_number(row.x) << ',' << format_number(row.t) << ','
        << format_number(row.ladm.real()) << ',' << format_number(row.ladm.imag()) << ','
        << format_number(row.exact.real()) << ',' << format_number(row.exact.imag()) << ','
        << format_number(row.err_re) << ',' << format_number(row.err_im) << ','
        << format_number(row.err_abs) << '\n';
}

}  // namespace

void write_comparison_csv(std::ostream& out, std::span<const ComparisonRow> rows) {
    out << "x,t,re_ladm,im_ladm,re_exact,im_exact,err_re,err_im,err_abs\n";
    for (const auto& row : rows) {
        write_row(out, row);
    }
}

void write_comparison_csv(std::ostream& out, std::span<const ComparisonRow> rows,
                          TablePart part) {
    if (part == TablePart::Real) {
        out << "x,t,re_ladm,re_exact,err_re\n";
        for (const auto& row : rows) {
            out << format_number(row.x) << ',' << format_number(row.t) << ','
                << format_number(row.ladm.real()) << ',' << format_number(row.exact.real())
                << ',' << format_number(row.err_re) << '\n';
        }
    } else {
        out << "x,t,im_ladm,im_exact,err_im\n";
        for (const auto& row : rows) {
            out << format_number(row.x) << ',' << format_number(row.t) << ','
                << format_number(row.ladm.imag()) << ',' << format_number(row.exact.imag())
                << ',' << format_number(row.err_im) << '\n';
        }
    }
}

nlohmann::json comparison_rows_to_json(std::span<const ComparisonRow> rows) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& row : rows) {
        out.push_back({{"x", row.x},
                       {"t", row.t},
                       {"re_ladm", row.ladm.real()},
                       {"im_ladm", row.ladm.imag()},
                       {"re_exact", row.exact.real()},
                       {"im_exact", row.exact.imag()},
                       {"err_re", row.err_re},
                       {"err_im", row.err_im},
                       {"err_abs", row.err_abs}});
    }
    return out;
}

nlohmann::json residual_report_json(const LadmRun& run, const EquationModel& model) {
    const std::vector<double> maxima = order_max_abs(residual(model, run.truncated));
    return {{"beta", run.beta},
            {"harmonic", run.harmonic},
            {"correction_terms", run.correction_terms},
            {"order_max_abs", maxima}};
}

}  // namespace ladm
