#include "grouplab/textio.hpp"

#include "grouplab/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>

namespace grouplab {

// ---------------------------------------------------------------------------
// Rational parsing (declared in rational.hpp).

Rational parse_rational(const std::string& text) {
    auto bad = [&] { return std::invalid_argument("malformed rational \"" + text + "\""); };
    if (text.empty()) throw bad();
    std::size_t slash = text.find('/');
    auto parse_ll = [&](const std::string& part) -> long long {
        if (part.empty()) throw bad();
        std::size_t i = part[0] == '-' ? 1 : 0;
        if (i == part.size()) throw bad();
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') throw bad();
        try {
            return std::stoll(part);
        } catch (const std::exception&) {
            throw bad();
        }
    };
    long long num = parse_ll(slash == std::string::npos ? text : text.substr(0, slash));
    long long den = 1;
    if (slash != std::string::npos) {
        den = parse_ll(text.substr(slash + 1));
        if (den <= 0) throw bad();
    }
    return Rational(num, den);
}

// ---------------------------------------------------------------------------
// File helpers.

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IOError("cannot open " + path + " for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IOError("failed reading " + path);
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IOError("cannot open " + path + " for writing");
    out << content;
    out.flush();
    if (!out) throw IOError("failed writing " + path);
}

// ---------------------------------------------------------------------------
// Complex / form format.

namespace {

std::string render_body(const Complex2& c, const AbstractLabeling* lab, const GeometricForm* form) {
    std::ostringstream out;
    out << "complex v=" << c.num_vertices() << " e=" << c.num_edges() << " f=" << c.num_faces()
        << "\n";
    for (const EdgeRec& e : c.edges()) out << "edge " << e.id << " " << e.from << " " << e.to << "\n";
    for (const FaceRec& f : c.faces()) {
        out << "face " << f.id << " :";
        for (int oe : f.boundary) out << " " << oe;
        out << "\n";
    }
    if (lab)
        for (auto [fid, l] : lab->labels) out << "label " << fid << " " << l << "\n";
    if (form)
        for (const EdgeRec& e : form->base.edges())
            out << "lambda " << e.id << " " << form->lambda_of(e.id).fraction_string() << "\n";
    return out.str();
}

long long parse_ll_token(const std::string& tok, const std::string& where) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError("expected an integer in " + where + ", got \"" + tok + "\"");
    }
}

// "key=value" field with a mandatory key.
std::string field_value(const std::string& tok, const std::string& key, const std::string& where) {
    if (tok.size() <= key.size() + 1 || tok.compare(0, key.size(), key) != 0 || tok[key.size()] != '=')
        throw ParseError("expected " + key + "=<value> in " + where + ", got \"" + tok + "\"");
    return tok.substr(key.size() + 1);
}

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

// Content lines: skip blanks and '#' comments.
std::vector<std::vector<std::string>> content_lines(const std::string& text) {
    std::vector<std::vector<std::string>> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto toks = tokenize(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        lines.push_back(std::move(toks));
    }
    return lines;
}

} // namespace

std::string render_complex(const Complex2& c, const AbstractLabeling* lab) {
    return render_body(c, lab, nullptr);
}

std::string render_form(const GeometricForm& f, const AbstractLabeling* lab) {
    return render_body(f.base, lab, &f);
}

ParsedComplex parse_complex(const std::string& text) {
    auto lines = content_lines(text);
    if (lines.empty() || lines[0][0] != "complex")
        throw ParseError("complex file must start with a `complex v=.. e=.. f=..` header");
    const auto& head = lines[0];
    if (head.size() != 4) throw ParseError("malformed complex header");
    long long nv = parse_ll_token(field_value(head[1], "v", "complex header"), "complex header");
    long long ne = parse_ll_token(field_value(head[2], "e", "complex header"), "complex header");
    long long nf = parse_ll_token(field_value(head[3], "f", "complex header"), "complex header");

    ComplexData d;
    std::vector<std::pair<int, int>> labels;
    std::vector<std::pair<int, Rational>> lambdas;
    std::set<int> vertex_ids;
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const auto& toks = lines[li];
        const std::string& kind = toks[0];
        if (kind == "edge") {
            if (toks.size() != 4) throw ParseError("edge line needs `edge <id> <from> <to>`");
            int id = (int)parse_ll_token(toks[1], "edge line");
            int from = (int)parse_ll_token(toks[2], "edge line");
            int to = (int)parse_ll_token(toks[3], "edge line");
            d.edges.push_back({id, from, to});
            vertex_ids.insert(from);
            vertex_ids.insert(to);
        } else if (kind == "face") {
            if (toks.size() < 4 || toks[2] != ":")
                throw ParseError("face line needs `face <id> : <signed edge ids>`");
            FaceRec f;
            f.id = (int)parse_ll_token(toks[1], "face line");
            for (std::size_t i = 3; i < toks.size(); ++i)
                f.boundary.push_back((int)parse_ll_token(toks[i], "face line"));
            d.faces.push_back(std::move(f));
        } else if (kind == "label") {
            if (toks.size() != 3) throw ParseError("label line needs `label <faceid> <+-i>`");
            labels.emplace_back((int)parse_ll_token(toks[1], "label line"),
                                (int)parse_ll_token(toks[2], "label line"));
        } else if (kind == "lambda") {
            if (toks.size() != 3) throw ParseError("lambda line needs `lambda <edgeid> <p>/<q>`");
            int id = (int)parse_ll_token(toks[1], "lambda line");
            try {
                lambdas.emplace_back(id, parse_rational(toks[2]));
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what());
            }
        } else {
            throw ParseError("unknown line kind \"" + kind + "\"");
        }
    }
    if ((long long)d.edges.size() != ne)
        throw ParseError("header declares e=" + std::to_string(ne) + " but " +
                         std::to_string(d.edges.size()) + " edge lines follow");
    if ((long long)d.faces.size() != nf)
        throw ParseError("header declares f=" + std::to_string(nf) + " but " +
                         std::to_string(d.faces.size()) + " face lines follow");
    if ((long long)vertex_ids.size() != nv)
        throw ParseError("header declares v=" + std::to_string(nv) + " but the edges touch " +
                         std::to_string(vertex_ids.size()) + " vertices");
    d.vertices.assign(vertex_ids.begin(), vertex_ids.end());

    ParsedComplex out;
    try {
        out.complex = Complex2::from_data(std::move(d));
        if (!labels.empty()) out.labeling = make_labeling(out.complex, labels);
        if (!lambdas.empty()) out.form = make_form(out.complex, lambdas);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Presentation format.

std::string render_presentation(const Presentation& p) {
    std::ostringstream out;
    out << "presentation m=" << p.m << " ell=" << p.ell << " model=" << p.model << " d="
        << p.d.fraction_string() << " seed=" << p.seed << "\n";
    for (const Word& w : p.relators) out << render_word(w) << "\n";
    return out.str();
}

Presentation parse_presentation(const std::string& text, bool reduce_input) {
    std::istringstream in(text);
    std::string line;
    Presentation p;
    bool have_header = false;
    std::set<Word> seen;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto toks = tokenize(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        if (!have_header) {
            if (toks[0] != "presentation" || toks.size() != 6)
                throw ParseError("presentation file must start with "
                                 "`presentation m=.. ell=.. model=.. d=.. seed=..`");
            p.m = (int)parse_ll_token(field_value(toks[1], "m", "presentation header"),
                                      "presentation header");
            p.ell = (int)parse_ll_token(field_value(toks[2], "ell", "presentation header"),
                                        "presentation header");
            p.model = field_value(toks[3], "model", "presentation header");
            static const std::set<std::string> kModels{"bernoulli", "fixedcount", "bernoulli-exact",
                                                       "fixedcount-exact", "manual"};
            if (!kModels.count(p.model))
                throw ParseError("unknown model \"" + p.model + "\" in presentation header");
            try {
                p.d = parse_rational(field_value(toks[4], "d", "presentation header"));
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what());
            }
            std::string seed_text = field_value(toks[5], "seed", "presentation header");
            try {
                std::size_t used = 0;
                p.seed = std::stoull(seed_text, &used);
                if (used != seed_text.size()) throw std::invalid_argument(seed_text);
            } catch (const std::exception&) {
                throw ParseError("malformed seed \"" + seed_text + "\"");
            }
            if (p.m < 1 || p.m > kMaxGenerators || p.ell < 1)
                throw ParseError("presentation header parameters out of range");
            have_header = true;
            continue;
        }
        if (toks.size() != 1) throw ParseError("expected one relator per line, got \"" + line + "\"");
        Word w = parse_word(toks[0], p.m);
        if (reduce_input) w = cyclic_reduce(w);
        if (w.empty()) throw ParseError("relator \"" + toks[0] + "\" is trivial");
        if (!is_cyclically_reduced(w))
            throw ParseError("relator \"" + toks[0] + "\" is not cyclically reduced");
        if ((int)w.size() > p.ell)
            throw ParseError("relator \"" + toks[0] + "\" is longer than ell=" + std::to_string(p.ell));
        if (!seen.insert(w).second)
            throw ParseError("duplicate relator \"" + render_word(w) + "\"");
        p.relators.push_back(std::move(w));
    }
    if (!have_header) throw ParseError("presentation file has no header");
    return p;
}

GeometricForm load_form(const std::string& spec) {
    const std::string prefix = "builtin:";
    try {
        if (spec.rfind(prefix, 0) == 0) return builtin_form(spec.substr(prefix.size()));
        ParsedComplex parsed = parse_complex(read_file(spec));
        if (!parsed.form)
            throw ParseError("file " + spec + " has no lambda lines and is not a geometric form");
        return std::move(*parsed.form);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

} // namespace grouplab
