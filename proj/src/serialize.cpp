#include "covops/serialize.hpp"

#include <sstream>
#include <vector>

namespace covops {

std::string poly_to_string(const Polynomial& p, const VarUniverse& u) {
    if (p.nvars() != u.count()) throw dimension_error("polynomial over wrong variable set");
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (!first) out += " + ";
        first = false;
        out += rat_str(c);
        for (int v = 0; v < p.nvars(); ++v) {
            if (!e[v]) continue;
            out += " * " + u.name(v);
            if (e[v] > 1) out += "^" + std::to_string(e[v]);
        }
    }
    return out;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_on(std::string_view s, std::string_view sep) {
    std::vector<std::string_view> out;
    size_t pos = 0;
    while (true) {
        size_t hit = s.find(sep, pos);
        if (hit == std::string_view::npos) {
            out.push_back(s.substr(pos));
            return out;
        }
        out.push_back(s.substr(pos, hit - pos));
        pos = hit + sep.size();
    }
}

} // namespace

Polynomial poly_parse(std::string_view text, const VarUniverse& u) {
    text = trim(text);
    if (text.empty()) throw parse_error("empty polynomial text");
    Polynomial p(u.count());
    if (text == "0") return p;
    for (std::string_view term : split_on(text, " + ")) {
        term = trim(term);
        if (term.empty()) throw parse_error("empty term in polynomial text");
        auto factors = split_on(term, " * ");
        Rational c = rat_parse(trim(factors[0]));
        Exponents e(u.count(), 0);
        for (size_t i = 1; i < factors.size(); ++i) {
            std::string_view f = trim(factors[i]);
            int exp = 1;
            if (size_t caret = f.find('^'); caret != std::string_view::npos) {
                std::string etxt(f.substr(caret + 1));
                try {
                    exp = std::stoi(etxt);
                } catch (...) { throw parse_error("bad exponent '" + etxt + "'"); }
                f = f.substr(0, caret);
            }
            auto v = u.var_by_name(trim(f));
            if (!v) throw parse_error("unknown variable '" + std::string(f) + "'");
            if (exp < 1) throw parse_error("exponent must be positive in polynomial text");
            e[*v] += exp;
        }
        p.add_term(e, c);
    }
    return p;
}

namespace {

std::string multi_to_string(const Exponents& a, int from, int to) {
    std::string out;
    for (int i = from; i < to; ++i) {
        if (i > from) out += ' ';
        out += std::to_string(a[i]);
    }
    return out;
}

std::string meta_header(const VarUniverse& u, const OperatorMeta& meta, bool bidiff, size_t nterms) {
    std::ostringstream os;
    os << "covops-operator v1\n";
    os << "universe " << (u.kind == VarUniverse::Kind::standard_m ? "standard" : "homogeneous") << " m " << u.m
       << "\n";
    os << "kind " << meta.kind << "\n";
    if (meta.k) os << "k " << *meta.k << "\n";
    os << "form " << (bidiff ? "bidifferential" : "operator") << "\n";
    if (meta.symbolic) os << "params symbolic\n";
    else if (!meta.s_val) os << "params none\n";
    else if (meta.lambda_mu) os << "params lambda " << rat_str(*meta.s_val) << " mu " << rat_str(*meta.t_val) << "\n";
    else os << "params s " << rat_str(*meta.s_val) << " t " << rat_str(*meta.t_val) << "\n";
    os << "scalar-dropped " << meta.scalar_dropped << "\n";
    os << "terms " << nterms << "\n";
    return os.str();
}

template <class TermMap>
std::string body_lines(const TermMap& terms, const VarUniverse& u) {
    std::string out;
    int nx = u.nderiv_x(), nd = u.nderiv();
    for (const auto& [a, p] : terms) {
        out += poly_to_string(p, u);
        out += " || " + multi_to_string(a, 0, nx) + " || " + multi_to_string(a, nx, nd) + "\n";
    }
    return out;
}

} // namespace

std::string operator_to_string(const DiffOperator& op, const OperatorMeta& meta) {
    return meta_header(op.universe(), meta, false, op.terms().size()) + body_lines(op.terms(), op.universe());
}

std::string operator_to_string(const BiDiffOperator& op, const OperatorMeta& meta) {
    return meta_header(op.universe(), meta, true, op.terms().size()) + body_lines(op.terms(), op.universe());
}

const VarUniverse& ParsedOperator::universe() const {
    if (op) return op->universe();
    if (biop) return biop->universe();
    throw parse_error("empty parsed operator");
}

ParsedOperator operator_parse(std::string_view text) {
    auto lines = split_on(text, "\n");
    size_t ln = 0;
    auto next_line = [&]() -> std::string_view {
        while (ln < lines.size()) {
            std::string_view l = trim(lines[ln++]);
            if (!l.empty()) return l;
        }
        throw parse_error("unexpected end of operator text");
    };
    auto words = [](std::string_view l) {
        std::vector<std::string_view> w;
        for (auto part : split_on(l, " "))
            if (!trim(part).empty()) w.push_back(trim(part));
        return w;
    };

    if (next_line() != "covops-operator v1") throw parse_error("missing covops-operator v1 header");
    auto uw = words(next_line());
    if (uw.size() != 4 || uw[0] != "universe" || uw[2] != "m") throw parse_error("bad universe line");
    int m = std::stoi(std::string(uw[3]));
    VarUniverse u = uw[1] == "standard" ? VarUniverse::standard(m)
                    : uw[1] == "homogeneous" ? VarUniverse::homogeneous(m)
                                             : throw parse_error("unknown universe kind");

    ParsedOperator out;
    auto kw = words(next_line());
    if (kw.size() != 2 || kw[0] != "kind") throw parse_error("bad kind line");
    out.meta.kind = std::string(kw[1]);

    std::string_view l = next_line();
    auto w = words(l);
    if (w[0] == "k") {
        if (w.size() != 2) throw parse_error("bad k line");
        out.meta.k = std::stoi(std::string(w[1]));
        w = words(l = next_line());
    }
    if (w.size() != 2 || w[0] != "form") throw parse_error("bad form line");
    out.bidifferential = w[1] == "bidifferential";
    if (!out.bidifferential && w[1] != "operator") throw parse_error("unknown operator form");

    w = words(next_line());
    if (w.empty() || w[0] != "params") throw parse_error("bad params line");
    if (w.size() == 2 && w[1] == "symbolic") out.meta.symbolic = true;
    else if (w.size() == 2 && w[1] == "none") {
        out.meta.symbolic = false;
    } else if (w.size() == 5 && (w[1] == "lambda" || w[1] == "s")) {
        out.meta.symbolic = false;
        out.meta.lambda_mu = w[1] == "lambda";
        out.meta.s_val = rat_parse(w[2]);
        out.meta.t_val = rat_parse(w[4]);
    } else throw parse_error("bad params line");

    w = words(next_line());
    if (w.size() != 2 || w[0] != "scalar-dropped") throw parse_error("bad scalar-dropped line");
    out.meta.scalar_dropped = std::string(w[1]);

    w = words(next_line());
    if (w.size() != 2 || w[0] != "terms") throw parse_error("bad terms line");
    int nterms = std::stoi(std::string(w[1]));

    DiffOperator op(u);
    BiDiffOperator biop(u);
    for (int i = 0; i < nterms; ++i) {
        auto parts = split_on(next_line(), "||");
        if (parts.size() != 3) throw parse_error("term line needs 'poly || dx || dy'");
        Polynomial c = poly_parse(trim(parts[0]), u);
        Exponents a;
        a.reserve(u.nderiv());
        for (int half = 1; half <= 2; ++half)
            for (auto tok : words(parts[half])) a.push_back(std::stoi(std::string(tok)));
        if (static_cast<int>(a.size()) != u.nderiv()) throw parse_error("multi-index length mismatch");
        if (out.bidifferential) biop.add_term(a, c);
        else op.add_term(a, c);
    }
    if (out.bidifferential) out.biop = std::move(biop);
    else out.op = std::move(op);
    return out;
}

} // namespace covops
