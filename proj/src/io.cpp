#include "apcover/io.hpp"

#include "apcover/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace apcover {

namespace {

// Strips comment lines and returns the remaining whitespace-separated tokens.
std::vector<std::string> tokenize(std::istream& in) {
    std::vector<std::string> tokens;
    std::string line;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
    }
    return tokens;
}

Integer parse_integer(const std::string& tok) {
    if (tok.empty()) throw ParseError("empty integer token");
    std::size_t i = tok[0] == '-' ? 1 : 0;
    if (i == tok.size()) throw ParseError("not an integer: '" + tok + "'");
    for (; i < tok.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(tok[i]))) {
            throw ParseError("not an integer: '" + tok + "'");
        }
    }
    return Integer(tok);
}

std::ifstream open_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    return in;
}

}  // namespace

Instance parse_instance(std::istream& in) {
    std::vector<Integer> values;
    for (const std::string& tok : tokenize(in)) values.push_back(parse_integer(tok));
    std::sort(values.begin(), values.end());
    if (std::adjacent_find(values.begin(), values.end()) != values.end()) {
        throw ParseError("instance contains duplicate elements");
    }
    return Instance(std::move(values));
}

Instance parse_instance_file(const std::string& path) {
    auto in = open_file(path);
    return parse_instance(in);
}

void print_instance(std::ostream& out, const Instance& X) {
    for (std::size_t i = 0; i < X.size(); ++i) {
        out << X[i] << '\n';
    }
}

ZpInstance parse_zp_instance(std::istream& in) {
    auto tokens = tokenize(in);
    if (tokens.empty() || tokens[0].rfind("p=", 0) != 0) {
        throw ParseError("zp instance must start with p=<prime>");
    }
    ZpInstance inst;
    inst.p = parse_integer(tokens[0].substr(2));
    if (!is_prime(inst.p)) {
        throw ParseError("zp instance modulus is not prime");
    }
    for (std::size_t i = 1; i < tokens.size(); ++i) {
        Integer r = parse_integer(tokens[i]);
        if (r < 0 || r >= inst.p) throw ParseError("residue out of range [0, p)");
        inst.elements.push_back(std::move(r));
    }
    std::sort(inst.elements.begin(), inst.elements.end());
    if (std::adjacent_find(inst.elements.begin(), inst.elements.end()) != inst.elements.end()) {
        throw ParseError("zp instance contains duplicate residues");
    }
    return inst;
}

ZpInstance parse_zp_instance_file(const std::string& path) {
    auto in = open_file(path);
    return parse_zp_instance(in);
}

void print_zp_instance(std::ostream& out, const ZpInstance& inst) {
    out << "p=" << inst.p << '\n';
    for (const Integer& r : inst.elements) out << r << '\n';
}

TuscFile parse_tusc(std::istream& in) {
    TuscFile file;
    std::string line;
    bool have_header = false;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        if (!have_header) {
            std::string n_tok, t_tok, k_tok;
            ls >> n_tok >> t_tok >> k_tok;
            if (n_tok.rfind("n=", 0) != 0 || t_tok.rfind("t=", 0) != 0 || k_tok.rfind("k=", 0) != 0) {
                throw ParseError("tusc header must be 'n=<int> t=<int> k=<int>'");
            }
            file.instance.universe = static_cast<int>(parse_integer(n_tok.substr(2)));
            file.instance.t = static_cast<int>(parse_integer(t_tok.substr(2)));
            file.k = static_cast<int>(parse_integer(k_tok.substr(2)));
            if (file.instance.universe < 0 || file.instance.t < 1) {
                throw ParseError("tusc header values out of range");
            }
            have_header = true;
            continue;
        }
        boost::dynamic_bitset<> set(file.instance.universe);
        std::string tok;
        while (ls >> tok) {
            Integer idx = parse_integer(tok);
            if (idx < 0 || idx >= file.instance.universe) {
                throw ParseError("tusc set element out of range [0, n)");
            }
            set.set(static_cast<std::size_t>(idx));
        }
        file.instance.explicit_sets.push_back(std::move(set));
    }
    if (!have_header) throw ParseError("tusc file missing header");
    return file;
}

TuscFile parse_tusc_file(const std::string& path) {
    auto in = open_file(path);
    return parse_tusc(in);
}

namespace {

Ap normalize_triple(Integer first, Integer diff, std::int64_t len) {
    if (len < 1) throw ParseError("AP length must be >= 1");
    if (len > (std::int64_t{1} << 30)) throw ParseError("AP length out of range");
    if (len == 1) return Ap::singleton(std::move(first));
    if (diff == 0) throw ParseError("AP of length >= 2 must have a nonzero difference");
    if (diff < 0) {
        first = first + diff * (len - 1);
        diff = -diff;
    }
    return Ap(std::move(first), std::move(diff), len);
}

std::vector<Ap> solution_from_json(const nlohmann::json& doc) {
    std::vector<Ap> aps;
    if (!doc.contains("witness") || !doc["witness"].is_array()) {
        throw ParseError("JSON solution has no witness array");
    }
    for (const auto& triple : doc["witness"]) {
        if (!triple.is_array() || triple.size() != 3) {
            throw ParseError("witness entries must be [first, diff, len] triples");
        }
        Integer first = parse_integer(triple[0].get<std::string>());
        Integer diff = parse_integer(triple[1].get<std::string>());
        std::int64_t len = triple[2].get<std::int64_t>();
        aps.push_back(normalize_triple(std::move(first), std::move(diff), len));
    }
    return aps;
}

}  // namespace

std::vector<Ap> parse_solution(std::istream& in) {
    std::stringstream buffered;
    buffered << in.rdbuf();
    std::string content = buffered.str();
    auto first = content.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && content[first] == '{') {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(content);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("bad JSON solution: ") + e.what());
        }
        return solution_from_json(doc);
    }
    std::istringstream text(content);
    std::vector<Ap> aps;
    std::string line;
    while (std::getline(text, line)) {
        auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream ls(line);
        std::string f_tok, d_tok, l_tok;
        if (!(ls >> f_tok >> d_tok >> l_tok)) {
            throw ParseError("solution line must be 'first diff len'");
        }
        std::string extra;
        if (ls >> extra) throw ParseError("trailing tokens on solution line");
        Integer len = parse_integer(l_tok);
        if (len < 1 || len > (Integer(1) << 30)) throw ParseError("AP length out of range");
        aps.push_back(normalize_triple(parse_integer(f_tok), parse_integer(d_tok),
                                       static_cast<std::int64_t>(len)));
    }
    return aps;
}

std::vector<Ap> parse_solution_file(const std::string& path) {
    auto in = open_file(path);
    return parse_solution(in);
}

void print_solution(std::ostream& out, const std::vector<Ap>& aps) {
    for (const Ap& ap : aps) out << ap.to_string() << '\n';
}

}  // namespace apcover
