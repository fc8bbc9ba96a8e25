#include "fpnkit/io.hpp"

#include <fstream>
#include <optional>
#include <sstream>

namespace fpnkit {

namespace {

struct LineReader {
    std::istream& in;
    int line = 0;
    std::optional<std::string> pushed;

    void unread(std::string s) { pushed = std::move(s); }

    // Next meaningful line, with comments ('#') and blank lines skipped.
    bool next(std::string& out) {
        if (pushed) {
            out = std::move(*pushed);
            pushed.reset();
            return true;
        }
        std::string s;
        while (std::getline(in, s)) {
            ++line;
            auto b = s.find_first_not_of(" \t\r");
            if (b == std::string::npos || s[b] == '#') continue;
            auto e = s.find_last_not_of(" \t\r");
            out = s.substr(b, e - b + 1);
            return true;
        }
        return false;
    }

    std::string require(const std::string& what) {
        std::string s;
        if (!next(s)) throw ParseError(line, "unexpected end of input, expected " + what);
        return s;
    }
};

RingMatrix read_matrix_block(LineReader& r) {
    std::istringstream hdr(r.require("a matrix header"));
    std::string ringtok;
    int rows = -1, cols = -1;
    hdr >> ringtok >> rows >> cols;
    if (ringtok.empty() || rows < 0 || cols < 0 || !(hdr >> std::ws).eof())
        throw ParseError(r.line, "matrix header must be '<ring> <rows> <cols>'");
    RingId ring;
    try {
        ring = parse_ring_token(ringtok);
    } catch (const std::exception& e) {
        throw ParseError(r.line, e.what());
    }
    RingMatrix m(ring, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            std::string entry = r.require("a matrix entry");
            try {
                m.at(i, j) = parse_elem(ring, entry);
            } catch (const std::exception& e) {
                throw ParseError(r.line, e.what());
            }
        }
    return m;
}

Presentation read_presentation_block(LineReader& r) {
    std::string first = r.require("a presentation");
    std::string label;
    if (first.rfind("module", 0) == 0) {
        auto b = first.find_first_not_of(" \t", 6);
        if (b != std::string::npos) label = first.substr(b);
    } else {
        // No label line: the line already is the matrix header.
        r.unread(first);
    }
    RingMatrix rel = read_matrix_block(r);
    return make_presentation(rel.ring, rel.rows, rel, label);
}

}  // namespace

std::string emit_presentation(const Presentation& p) {
    std::string out;
    if (!p.label.empty()) out += "module " + p.label + "\n";
    out += emit_matrix(p.relations);
    return out;
}

Presentation parse_presentation(std::istream& in) {
    LineReader r{in};
    return read_presentation_block(r);
}

Presentation parse_presentation(const std::string& text) {
    std::istringstream in(text);
    return parse_presentation(in);
}

Presentation read_presentation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open presentation file: " + path);
    return parse_presentation(in);
}

std::string emit_universe(const ModuleUniverse& u) {
    std::ostringstream os;
    os << "universe " << ring_token(u.ring) << "\n";
    os << "modules " << u.modules.size() << "\n";
    for (const Presentation& p : u.modules) os << emit_presentation(p);
    os << "maps " << u.maps.size() << "\n";
    for (const DeclaredMap& m : u.maps) {
        os << "map " << m.from << " " << m.to << " "
           << (m.kind == DeclaredMap::Kind::Inclusion ? "inclusion" : "surjection");
        if (!m.label.empty()) os << " " << m.label;
        os << "\n" << emit_matrix(m.matrix);
    }
    return os.str();
}

ModuleUniverse parse_universe(std::istream& in) {
    LineReader r{in};
    ModuleUniverse u;

    std::istringstream hdr(r.require("the universe header"));
    std::string kw, ringtok;
    hdr >> kw >> ringtok;
    if (kw != "universe" || ringtok.empty())
        throw ParseError(r.line, "expected 'universe <ring>'");
    try {
        u.ring = parse_ring_token(ringtok);
    } catch (const std::exception& e) {
        throw ParseError(r.line, e.what());
    }

    std::istringstream mods(r.require("the module count"));
    long nmods = -1;
    mods >> kw >> nmods;
    if (kw != "modules" || nmods < 0) throw ParseError(r.line, "expected 'modules <count>'");
    for (long i = 0; i < nmods; ++i) {
        Presentation p = read_presentation_block(r);
        if (p.ring != u.ring)
            throw ParseError(r.line, "module ring does not match the universe ring");
        u.modules.push_back(std::move(p));
    }

    std::istringstream maps(r.require("the map count"));
    long nmaps = -1;
    maps >> kw >> nmaps;
    if (kw != "maps" || nmaps < 0) throw ParseError(r.line, "expected 'maps <count>'");
    for (long i = 0; i < nmaps; ++i) {
        std::istringstream mh(r.require("a map header"));
        DeclaredMap m;
        std::string kind;
        mh >> kw >> m.from >> m.to >> kind;
        std::getline(mh, m.label);
        auto b = m.label.find_first_not_of(" \t");
        m.label = b == std::string::npos ? "" : m.label.substr(b);
        if (kw != "map" || m.from < 0 || m.to < 0 ||
            m.from >= static_cast<int>(u.modules.size()) ||
            m.to >= static_cast<int>(u.modules.size()))
            throw ParseError(r.line, "expected 'map <from> <to> <kind>' with valid indices");
        if (kind == "inclusion")
            m.kind = DeclaredMap::Kind::Inclusion;
        else if (kind == "surjection")
            m.kind = DeclaredMap::Kind::Surjection;
        else
            throw ParseError(r.line, "map kind must be 'inclusion' or 'surjection'");
        m.matrix = read_matrix_block(r);
        if (m.matrix.ring != u.ring)
            throw ParseError(r.line, "map matrix ring does not match the universe ring");
        u.maps.push_back(std::move(m));
    }
    return u;
}

ModuleUniverse parse_universe(const std::string& text) {
    std::istringstream in(text);
    return parse_universe(in);
}

}  // namespace fpnkit
