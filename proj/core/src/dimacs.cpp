#include "packsat/dimacs.hpp"

#include <charconv>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace packsat {

std::string InstanceInfo::to_json() const
{
    nlohmann::ordered_json j;
    j["r"] = r;
    j["k"] = k;
    j["c"] = c;
    j["variant"] = variant_name(variant);
    j["alod"] = alod;
    j["sym_colors"] = sym_colors;
    j["chessboard"] = chessboard;
    return j.dump();
}

InstanceInfo InstanceInfo::from_json(const std::string& text)
{
    auto j = nlohmann::json::parse(text);
    InstanceInfo info;
    info.r = j.at("r").get<int>();
    info.k = j.at("k").get<int>();
    info.c = j.at("c").get<int>();
    info.variant = j.at("variant").get<std::string>() == "plus" ? Variant::plus : Variant::direct;
    info.alod = j.at("alod").get<bool>();
    info.sym_colors = j.at("sym_colors").get<std::vector<int>>();
    info.chessboard = j.at("chessboard").get<bool>();
    return info;
}

std::string InstanceInfo::tag() const
{
    std::ostringstream os;
    os << variant_name(variant) << "-r" << r << "-k" << k << "-c" << c;
    if (alod) os << "+alod";
    if (!sym_colors.empty()) os << "+sym";
    if (chessboard) os << "+chess";
    return os.str();
}

void write_dimacs(const Formula& f, std::ostream& os)
{
    os << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
    for (const Clause& c : f.clauses) {
        for (Lit l : c) os << l << ' ';
        os << "0\n";
    }
}

std::string write_dimacs(const Formula& f)
{
    std::ostringstream os;
    write_dimacs(f, os);
    return os.str();
}

DimacsParseError::DimacsParseError(int line_, const std::string& what)
    : std::runtime_error("dimacs line " + std::to_string(line_) + ": " + what), line(line_)
{
}

Formula parse_dimacs(std::istream& is)
{
    Formula f;
    bool header_seen = false;
    long declared_clauses = 0;
    std::string line;
    int lineno = 0;
    Clause pending;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty() || line[0] == 'c') continue;
        if (line[0] == 'p') {
            std::istringstream hs(line);
            std::string p, fmt;
            if (!(hs >> p >> fmt >> f.num_vars >> declared_clauses) || fmt != "cnf")
                throw DimacsParseError(lineno, "malformed header");
            if (f.num_vars < 0 || declared_clauses < 0)
                throw DimacsParseError(lineno, "negative header counts");
            header_seen = true;
            continue;
        }
        if (!header_seen) throw DimacsParseError(lineno, "clause before header");
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            int v = 0;
            auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (ec != std::errc() || p != tok.data() + tok.size())
                throw DimacsParseError(lineno, "malformed literal '" + tok + "'");
            if (v == 0) {
                f.add(std::move(pending));
                pending.clear();
            } else {
                if (lit_var(v) > f.num_vars)
                    throw DimacsParseError(lineno, "literal exceeds declared variable count");
                pending.push_back(v);
            }
        }
    }
    if (!header_seen) throw DimacsParseError(lineno, "missing header");
    if (!pending.empty()) throw DimacsParseError(lineno, "unterminated clause");
    if (long(f.clauses.size()) != declared_clauses)
        throw DimacsParseError(lineno, "clause count mismatch: header says " +
                                           std::to_string(declared_clauses) + ", body has " +
                                           std::to_string(f.clauses.size()));
    return f;
}

Formula parse_dimacs(const std::string& text)
{
    std::istringstream is(text);
    return parse_dimacs(is);
}

void write_icnf(const Formula& f, const std::vector<Cube>& cubes, std::ostream& os)
{
    os << "p inccnf\n";
    for (const Clause& c : f.clauses) {
        for (Lit l : c) os << l << ' ';
        os << "0\n";
    }
    for (const Cube& cube : cubes) {
        os << 'a';
        for (Lit l : cube.positives) os << ' ' << l;
        for (Lit l : cube.negatives) os << ' ' << l;
        os << " 0\n";
    }
}

std::string write_icnf(const Formula& f, const std::vector<Cube>& cubes)
{
    std::ostringstream os;
    write_icnf(f, cubes, os);
    return os.str();
}

}  // namespace packsat
