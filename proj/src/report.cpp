#include "delpezzo/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace delpezzo {

namespace {

using OrderedJson = nlohmann::ordered_json;

constexpr const char* kIndexLetters[8] = {"i", "j", "k", "l", "m", "n", "p", "q"};

int verdict_rank(Positivity v) {
    switch (v) {
        case Positivity::AmpleAllEps: return 0;
        case Positivity::NefBigAtHalf: return 1;
        case Positivity::NefNotBigAtHalf: return 2;
        case Positivity::NeverNef: return 3;
        case Positivity::Degenerate: return 4;
    }
    return 5;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out += "\"\"";
        else out += ch;
    }
    out += "\"";
    return out;
}

OrderedJson tag_to_json(const StructuralTag& t) {
    OrderedJson j;
    j["kind"] = to_string(t.kind);
    j["multiple"] = t.multiple;
    j["target_degree"] = t.target_degree;
    j["p"] = t.p;
    j["q"] = t.q;
    j["c"] = t.c;
    j["e"] = t.e;
    return j;
}

StructuralTag tag_from_json(const OrderedJson& j) {
    StructuralTag t;
    const std::string kind = j.at("kind").get<std::string>();
    for (int k = 0; k <= static_cast<int>(TagKind::Unclassified); ++k) {
        if (to_string(static_cast<TagKind>(k)) == kind) {
            t.kind = static_cast<TagKind>(k);
            break;
        }
    }
    t.multiple = j.at("multiple").get<int>();
    t.target_degree = j.at("target_degree").get<int>();
    t.p = j.at("p").get<int>();
    t.q = j.at("q").get<int>();
    t.c = j.at("c").get<int>();
    t.e = j.at("e").get<int>();
    return t;
}

Positivity positivity_from_string(const std::string& s) {
    for (Positivity v : {Positivity::AmpleAllEps, Positivity::NefBigAtHalf,
                         Positivity::NefNotBigAtHalf, Positivity::NeverNef,
                         Positivity::Degenerate})
        if (to_string(v) == s) return v;
    throw std::invalid_argument("unknown verdict: " + s);
}

OrderedJson verdict_to_json(const PositivityVerdict& v) {
    OrderedJson j;
    j["mu"] = static_cast<long long>(v.mu);
    j["nef_threshold"] = v.nef_threshold ? render_rational(*v.nef_threshold) : "inf";
    j["verdict"] = to_string(v.verdict);
    j["adjoint_sq_at_half"] = render_rational(v.adjoint_self_intersection_at_half);
    return j;
}

Rat rational_from_string(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

PositivityVerdict verdict_from_json(const OrderedJson& j) {
    PositivityVerdict v{Int(j.at("mu").get<long long>()), std::nullopt,
                        positivity_from_string(j.at("verdict").get<std::string>()),
                        rational_from_string(j.at("adjoint_sq_at_half").get<std::string>())};
    const std::string thr = j.at("nef_threshold").get<std::string>();
    if (thr != "inf") v.nef_threshold = rational_from_string(thr);
    return v;
}

}  // namespace

std::string render_class(const DivisorClass& c) {
    std::ostringstream out;
    bool have_leading = false;
    if (c.a != 0) {
        if (c.a == 1) out << "H";
        else if (c.a == -1) out << "-H";
        else out << c.a << "H";
        have_leading = true;
    }
    int letter = 0;  // one index letter per printed term
    for (const auto& bi : c.b) {
        if (bi == 0) continue;
        std::string name = letter < 8 ? std::string("E") + kIndexLetters[letter]
                                      : "E" + std::to_string(letter + 1);
        ++letter;
        const Int coeff = bi > 0 ? bi : -bi;  // rendered magnitude
        const bool minus = bi > 0;            // class is aH - sum b_i E_i
        if (have_leading) out << (minus ? " - " : " + ");
        else if (minus) out << "-";
        if (coeff != 1) out << coeff;
        out << name;
        have_leading = true;
    }
    if (!have_leading) out << "0";
    return out.str();
}

std::string render_class_indexed(const DivisorClass& c) {
    std::ostringstream out;
    bool have_leading = false;
    if (c.a != 0) {
        if (c.a == 1) out << "H";
        else if (c.a == -1) out << "-H";
        else out << c.a << "H";
        have_leading = true;
    }
    for (size_t slot = 0; slot < c.b.size(); ++slot) {
        const Int& bi = c.b[slot];
        if (bi == 0) continue;
        const Int coeff = bi > 0 ? bi : -bi;
        const bool minus = bi > 0;
        if (have_leading) out << (minus ? " - " : " + ");
        else if (minus) out << "-";
        if (coeff != 1) out << coeff;
        out << "E" << (slot + 1);
        have_leading = true;
    }
    if (!have_leading) out << "0";
    return out.str();
}

std::string render_rational_class(const RationalDivisorClass& c) {
    std::ostringstream out;
    bool have_leading = false;
    if (c.a != 0) {
        if (c.a == 1) out << "H";
        else if (c.a == -1) out << "-H";
        else out << render_rational(c.a) << "H";
        have_leading = true;
    }
    for (size_t slot = 0; slot < c.b.size(); ++slot) {
        const Rat& bi = c.b[slot];
        if (bi == 0) continue;
        const Rat coeff = bi > 0 ? bi : Rat(-bi);
        const bool minus = bi > 0;
        if (have_leading) out << (minus ? " - " : " + ");
        else if (minus) out << "-";
        if (coeff != 1) out << render_rational(coeff);
        out << "E" << (slot + 1);
        have_leading = true;
    }
    if (!have_leading) out << "0";
    return out.str();
}

std::string render_rational(const Rat& r) {
    std::ostringstream out;
    out << numerator(r);
    if (denominator(r) != 1) out << "/" << denominator(r);
    return out.str();
}

ReportDocument build_report(const std::vector<int>& degrees) {
    ReportDocument doc;
    doc.tool_version = kToolVersion;
    doc.degrees = degrees;
    std::sort(doc.degrees.begin(), doc.degrees.end());
    doc.degrees.erase(std::unique(doc.degrees.begin(), doc.degrees.end()), doc.degrees.end());
    for (int d : doc.degrees) {
        if (d < 1 || d > 5)
            throw std::domain_error("classification tables cover degrees 1..5 only");
        Surface s(d);
        for (Int m = 1; m <= 2 * d; ++m) {
            for (const Int& n : feasible_self_intersections(d, m)) {
                CellClassification cell = classify_cell(s, m, n);
                TableRow row{d, m, n, {}, {}, Int(cell.families.size()),
                             cell.cell_tag, describe(cell.cell_tag, d), std::nullopt};
                for (const auto& fam : cell.families) {
                    row.forms.push_back(render_class(fam.representative));
                    row.orbit_sizes.push_back(fam.orbit_size);
                }
                std::optional<PositivityVerdict> best;
                for (const auto& fam : cell.families) {
                    PositivityVerdict v = classify_boundary(fam.representative);
                    if (!best || verdict_rank(v.verdict) < verdict_rank(best->verdict) ||
                        (verdict_rank(v.verdict) == verdict_rank(best->verdict) && v.mu < best->mu))
                        best = v;
                }
                row.verdict = best;
                doc.rows.push_back(std::move(row));
            }
        }
        if (d == 5) {
            doc.discrepancy_notes.push_back(
                "d=5 m=10 n=16: no structural description is asserted for this cell; "
                "the three families are reported in explicit form only.");
            doc.discrepancy_notes.push_back(
                "d=5 m=10 n=18: C + K has anticanonical degree 5 and self-intersection 3, "
                "the pullback of 2H' - E from the one-point blow-up of P^2, so C lies in "
                "|-K + 2pi^*H' - pi^*E|; describing this cell as -K + pi^*H' - pi^*E is "
                "inconsistent (pi^*H' - pi^*E has anticanonical degree 2, not 5).");
        }
    }
    return doc;
}

std::string render_json(const ReportDocument& doc) {
    OrderedJson j;
    j["tool_version"] = doc.tool_version;
    j["degrees"] = doc.degrees;
    j["rows"] = OrderedJson::array();
    for (const auto& row : doc.rows) {
        OrderedJson r;
        r["degree"] = row.degree;
        r["m"] = static_cast<long long>(row.m);
        r["n"] = static_cast<long long>(row.n);
        r["forms"] = row.forms;
        r["orbit_sizes"] = OrderedJson::array();
        for (const auto& o : row.orbit_sizes) r["orbit_sizes"].push_back(static_cast<long long>(o));
        r["family_count"] = static_cast<long long>(row.family_count);
        r["tag"] = tag_to_json(row.tag);
        r["tag_description"] = row.tag_description;
        r["verdict"] = row.verdict ? verdict_to_json(*row.verdict) : OrderedJson(nullptr);
        j["rows"].push_back(std::move(r));
    }
    j["discrepancy_notes"] = doc.discrepancy_notes;
    return j.dump(2) + "\n";
}

ReportDocument parse_json(const std::string& text) {
    const OrderedJson j = OrderedJson::parse(text);
    ReportDocument doc;
    doc.tool_version = j.at("tool_version").get<std::string>();
    doc.degrees = j.at("degrees").get<std::vector<int>>();
    for (const auto& r : j.at("rows")) {
        TableRow row{r.at("degree").get<int>(), Int(r.at("m").get<long long>()),
                     Int(r.at("n").get<long long>()),
                     r.at("forms").get<std::vector<std::string>>(), {},
                     Int(r.at("family_count").get<long long>()),
                     tag_from_json(r.at("tag")),
                     r.at("tag_description").get<std::string>(), std::nullopt};
        for (const auto& o : r.at("orbit_sizes")) row.orbit_sizes.push_back(Int(o.get<long long>()));
        if (!r.at("verdict").is_null()) row.verdict = verdict_from_json(r.at("verdict"));
        doc.rows.push_back(std::move(row));
    }
    doc.discrepancy_notes = j.at("discrepancy_notes").get<std::vector<std::string>>();
    return doc;
}

std::string render_csv(const ReportDocument& doc) {
    std::ostringstream out;
    out << "degree,m,n,family_count,tag,tag_description,forms,orbit_sizes,mu,"
           "nef_threshold,verdict,adjoint_sq_at_half\n";
    for (const auto& row : doc.rows) {
        std::string forms;
        for (size_t i = 0; i < row.forms.size(); ++i) {
            if (i) forms += "; ";
            forms += row.forms[i];
        }
        std::string orbits;
        for (size_t i = 0; i < row.orbit_sizes.size(); ++i) {
            if (i) orbits += "; ";
            orbits += row.orbit_sizes[i].str();
        }
        out << row.degree << "," << row.m << "," << row.n << "," << row.family_count << ","
            << to_string(row.tag.kind) << "," << csv_escape(row.tag_description) << ","
            << csv_escape(forms) << "," << csv_escape(orbits) << ",";
        if (row.verdict) {
            out << row.verdict->mu << ","
                << (row.verdict->nef_threshold ? render_rational(*row.verdict->nef_threshold)
                                               : "inf")
                << "," << to_string(row.verdict->verdict) << ","
                << render_rational(row.verdict->adjoint_self_intersection_at_half);
        } else {
            out << ",,,";
        }
        out << "\n";
    }
    return out.str();
}

std::string render_markdown(const ReportDocument& doc) {
    std::ostringstream out;
    out << "# Low degree irreducible curves on del Pezzo surfaces\n";
    for (int d : doc.degrees) {
        out << "\n## Degree " << d << "\n\n";
        out << "| m | n | families | description | verdict | forms |\n";
        out << "|---|---|----------|-------------|---------|-------|\n";
        for (const auto& row : doc.rows) {
            if (row.degree != d) continue;
            out << "| " << row.m << " | " << row.n << " | " << row.family_count << " | "
                << row.tag_description << " | "
                << (row.verdict ? to_string(row.verdict->verdict) : std::string("-")) << " | ";
            for (size_t i = 0; i < row.forms.size(); ++i) {
                if (i) out << "; ";
                out << row.forms[i];
            }
            out << " |\n";
        }
    }
    if (!doc.discrepancy_notes.empty()) {
        out << "\n## Notes\n\n";
        for (const auto& note : doc.discrepancy_notes) out << "- " << note << "\n";
    }
    return out.str();
}

bool operator==(const TableRow& x, const TableRow& y) {
    auto opt_eq = [](const std::optional<PositivityVerdict>& a,
                     const std::optional<PositivityVerdict>& b) {
        if (a.has_value() != b.has_value()) return false;
        if (!a) return true;
        return a->mu == b->mu && a->nef_threshold == b->nef_threshold &&
               a->verdict == b->verdict &&
               a->adjoint_self_intersection_at_half == b->adjoint_self_intersection_at_half;
    };
    return x.degree == y.degree && x.m == y.m && x.n == y.n && x.forms == y.forms &&
           x.orbit_sizes == y.orbit_sizes && x.family_count == y.family_count &&
           x.tag == y.tag && x.tag_description == y.tag_description &&
           opt_eq(x.verdict, y.verdict);
}

bool operator==(const ReportDocument& x, const ReportDocument& y) {
    return x.tool_version == y.tool_version && x.degrees == y.degrees && x.rows == y.rows &&
           x.discrepancy_notes == y.discrepancy_notes;
}

}  // namespace delpezzo
