#include "spingate/netlist.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace spingate {

namespace {

struct Token {
    std::string text;
    int column = 0;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) &&
               line[j] != '#') {
            ++j;
        }
        out.push_back({std::string(line.substr(i, j - i)), static_cast<int>(i) + 1});
        i = j;
    }
    return out;
}

[[noreturn]] void fail(ParseErrorKind kind, int line, int col, const std::string& msg) {
    throw ParseError(kind, line, col, msg);
}

int parse_int(const Token& t, int line, const char* what) {
    std::size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(t.text, &pos);
    } catch (const std::exception&) {
        fail(ParseErrorKind::Syntax, line, t.column,
             std::string("expected ") + what + ", got '" + t.text + "'");
    }
    if (pos != t.text.size() || v < 0) {
        fail(ParseErrorKind::Syntax, line, t.column,
             std::string("expected ") + what + ", got '" + t.text + "'");
    }
    return v;
}

PolSign parse_sign(const Token& t, int line) {
    if (t.text == "+") return PolSign::Plus;
    if (t.text == "-") return PolSign::Minus;
    fail(ParseErrorKind::Syntax, line, t.column, "expected '+' or '-', got '" + t.text + "'");
}

struct LineParser {
    const std::vector<Token>& toks;
    int line;
    std::size_t next = 1;  // toks[0] is the keyword

    const Token& take(const char* what) {
        if (next >= toks.size()) {
            fail(ParseErrorKind::Syntax, line,
                 toks.empty() ? 1 : toks.back().column + static_cast<int>(toks.back().text.size()),
                 std::string("missing ") + what);
        }
        return toks[next++];
    }

    std::optional<std::string> take_checkpoint() {
        if (next < toks.size() && toks[next].text.size() > 1 && toks[next].text[0] == '@') {
            return toks[next++].text.substr(1);
        }
        return std::nullopt;
    }

    void done() {
        if (next != toks.size()) {
            fail(ParseErrorKind::Syntax, line, toks[next].column,
                 "unexpected token '" + toks[next].text + "'");
        }
    }
};

// Possible polarization occupancy per mode for a generic input, propagated
// through the element list. Conservative: may mark both polarizations where
// specific inputs leave one empty.
struct Occupancy {
    std::map<ModeLabel, std::set<Pol>> occ;

    std::set<Pol>& at(const ModeLabel& m) { return occ[m]; }

    void step(const Element& e) {
        std::visit(
            [&](const auto& el) {
                using T = std::decay_t<decltype(el)>;
                if constexpr (std::is_same_v<T, Pbs>) {
                    auto in = at(el.in);
                    at(el.in).clear();
                    if (in.count(Pol::R)) at(el.transmit_to).insert(Pol::R);
                    if (in.count(Pol::L)) at(el.reflect_to).insert(Pol::L);
                } else if constexpr (std::is_same_v<T, PmPbs>) {
                    auto in = at(el.in);
                    at(el.in).clear();
                    if (!in.empty()) {
                        at(el.plus_to) = {Pol::R, Pol::L};
                        at(el.minus_to) = {Pol::R, Pol::L};
                    }
                } else if constexpr (std::is_same_v<T, Hwp> || std::is_same_v<T, WpMirror>) {
                    if (!at(el.mode).empty()) at(el.mode) = {Pol::R, Pol::L};
                } else if constexpr (std::is_same_v<T, Bs>) {
                    std::set<Pol> u = at(el.in_a);
                    u.insert(at(el.in_b).begin(), at(el.in_b).end());
                    at(el.in_a).clear();
                    at(el.in_b).clear();
                    at(el.out_a).insert(u.begin(), u.end());
                    at(el.out_b).insert(u.begin(), u.end());
                } else if constexpr (std::is_same_v<T, SwitchEl>) {
                    auto in = at(el.from);
                    at(el.from).clear();
                    at(el.to).insert(in.begin(), in.end());
                } else if constexpr (std::is_same_v<T, CavityEl> || std::is_same_v<T, SpinH> ||
                                     std::is_same_v<T, SpinZ>) {
                    // polarization occupancy unchanged
                }
            },
            e);
    }

    std::set<ModeLabel> terminal() const {
        std::set<ModeLabel> t;
        for (const auto& [m, pols] : occ) {
            if (!pols.empty()) t.insert(m);
        }
        return t;
    }
};

void check_distinct(std::initializer_list<ModeLabel> modes, const char* what) {
    std::set<ModeLabel> seen;
    for (const ModeLabel& m : modes) {
        if (m.empty()) {
            fail(ParseErrorKind::Syntax, 0, 0, std::string(what) + ": empty mode label");
        }
        if (!seen.insert(m).second) {
            fail(ParseErrorKind::Syntax, 0, 0,
                 std::string(what) + ": routing modes must be distinct ('" + m + "')");
        }
    }
}

void check_spin(int spin, int spin_count, const char* what) {
    if (spin < 0 || spin >= spin_count) {
        fail(ParseErrorKind::Syntax, 0, 0,
             std::string(what) + ": spin index " + std::to_string(spin) +
                 " out of range for " + std::to_string(spin_count) + " spins");
    }
}

std::string pol_token(const std::array<Complex, 2>& pol) {
    const double eps = 1e-12;
    auto near = [&](const Complex& a, double re) { return std::abs(a - Complex(re)) < eps; };
    if (near(pol[0], 1.0) && near(pol[1], 0.0)) return "R";
    if (near(pol[0], 0.0) && near(pol[1], 1.0)) return "L";
    if (near(pol[0], kInvSqrt2) && near(pol[1], kInvSqrt2)) return "R+L";
    if (near(pol[0], kInvSqrt2) && near(pol[1], -kInvSqrt2)) return "R-L";
    throw Error("input polarization not representable as R, L, R+L or R-L");
}

}  // namespace

Netlist parse_netlist(std::string_view text) {
    Netlist nl;
    bool have_spins = false;
    bool have_input = false;
    bool past_elements = false;

    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const std::vector<Token> toks = tokenize(raw);
        if (toks.empty()) continue;
        const std::string& kw = toks[0].text;
        LineParser p{toks, lineno};

        auto require_header = [&]() {
            if (!have_spins || !have_input) {
                fail(ParseErrorKind::Syntax, lineno, toks[0].column,
                     "'spins' and 'input' must precede '" + kw + "'");
            }
        };
        auto require_before_detectors = [&]() {
            if (past_elements) {
                fail(ParseErrorKind::Syntax, lineno, toks[0].column,
                     "element '" + kw + "' appears after detector/feedforward lines");
            }
        };

        if (kw == "spins") {
            if (have_spins) fail(ParseErrorKind::Syntax, lineno, toks[0].column, "duplicate 'spins'");
            nl.spin_count = parse_int(p.take("spin count"), lineno, "spin count");
            p.done();
            have_spins = true;
        } else if (kw == "input") {
            if (!have_spins) {
                fail(ParseErrorKind::Syntax, lineno, toks[0].column, "'spins' must precede 'input'");
            }
            if (have_input) fail(ParseErrorKind::Syntax, lineno, toks[0].column, "duplicate 'input'");
            nl.input_mode = p.take("input mode").text;
            const Token& pol = p.take("input polarization");
            if (pol.text == "R") {
                nl.input_pol = {Complex(1.0), Complex(0.0)};
            } else if (pol.text == "L") {
                nl.input_pol = {Complex(0.0), Complex(1.0)};
            } else if (pol.text == "R+L") {
                nl.input_pol = {Complex(kInvSqrt2), Complex(kInvSqrt2)};
            } else if (pol.text == "R-L") {
                nl.input_pol = {Complex(kInvSqrt2), Complex(-kInvSqrt2)};
            } else {
                fail(ParseErrorKind::Syntax, lineno, pol.column,
                     "input polarization must be R, L, R+L or R-L");
            }
            p.done();
            have_input = true;
        } else if (kw == "PBS" || kw == "PMPBS" || kw == "HWP" || kw == "WPM" || kw == "BS" ||
                   kw == "SH" || kw == "SZ" || kw == "CAV" || kw == "SW") {
            require_header();
            require_before_detectors();
            Element el;
            if (kw == "PBS") {
                ModeLabel a = p.take("input mode").text;
                ModeLabel t = p.take("transmit mode").text;
                ModeLabel r = p.take("reflect mode").text;
                el = Pbs{a, t, r};
            } else if (kw == "PMPBS") {
                ModeLabel a = p.take("input mode").text;
                ModeLabel pl = p.take("plus mode").text;
                ModeLabel mi = p.take("minus mode").text;
                el = PmPbs{a, pl, mi};
            } else if (kw == "HWP") {
                el = Hwp{p.take("mode").text};
            } else if (kw == "WPM") {
                el = WpMirror{p.take("mode").text};
            } else if (kw == "BS") {
                ModeLabel ia = p.take("input mode a").text;
                ModeLabel ib = p.take("input mode b").text;
                ModeLabel oa = p.take("output mode a").text;
                ModeLabel ob = p.take("output mode b").text;
                el = Bs{ia, ib, oa, ob};
            } else if (kw == "SH") {
                el = SpinH{parse_int(p.take("spin index"), lineno, "spin index")};
            } else if (kw == "SZ") {
                int spin = parse_int(p.take("spin index"), lineno, "spin index");
                el = SpinZ{spin, parse_sign(p.take("sign"), lineno) == PolSign::Plus ? +1 : -1};
            } else if (kw == "CAV") {
                int spin = parse_int(p.take("spin index"), lineno, "spin index");
                el = CavityEl{spin, p.take("mode").text};
            } else {  // SW
                ModeLabel f = p.take("from mode").text;
                ModeLabel t = p.take("to mode").text;
                el = SwitchEl{f, t};
            }
            std::optional<std::string> cp = p.take_checkpoint();
            p.done();
            nl.steps.push_back({std::move(el), std::move(cp)});
        } else if (kw == "detector") {
            require_header();
            past_elements = true;
            DetectorSpec d;
            d.label = p.take("outcome label").text;
            d.mode = p.take("mode").text;
            d.basis = parse_sign(p.take("basis"), lineno);
            p.done();
            nl.detectors.push_back(std::move(d));
        } else if (kw == "feedforward") {
            require_header();
            past_elements = true;
            const std::string label = p.take("outcome label").text;
            if (nl.feedforward.count(label)) {
                fail(ParseErrorKind::DuplicateOutcomeLabel, lineno, toks[0].column,
                     "duplicate feedforward for outcome '" + label + "'");
            }
            std::vector<FeedForwardStep> ops;
            while (p.next < toks.size()) {
                int spin = parse_int(p.take("spin index"), lineno, "spin index");
                const Token& op = p.take("feed-forward op");
                FeedForwardOp ff;
                if (op.text == "I") {
                    ff = FeedForwardOp::I;
                } else if (op.text == "Z") {
                    ff = FeedForwardOp::Z;
                } else if (op.text == "-Z") {
                    ff = FeedForwardOp::MinusZ;
                } else {
                    fail(ParseErrorKind::Syntax, lineno, op.column,
                         "feed-forward op must be I, Z or -Z");
                }
                ops.push_back({spin, ff});
            }
            nl.feedforward.emplace(label, std::move(ops));
        } else {
            fail(ParseErrorKind::UnknownKeyword, lineno, toks[0].column,
                 "unknown keyword '" + kw + "'");
        }
    }
    if (!have_spins) {
        fail(ParseErrorKind::Syntax, 1, 1, "missing 'spins' declaration");
    }
    if (!have_input) {
        fail(ParseErrorKind::Syntax, lineno, 1, "missing 'input' declaration");
    }
    validate_netlist(nl);
    return nl;
}

void validate_netlist(const Netlist& nl) {
    if (nl.spin_count < 0) fail(ParseErrorKind::Syntax, 0, 0, "negative spin count");
    if (nl.input_mode.empty()) fail(ParseErrorKind::Syntax, 0, 0, "empty input mode");

    for (const NetlistStep& step : nl.steps) {
        std::visit(
            [&](const auto& el) {
                using T = std::decay_t<decltype(el)>;
                if constexpr (std::is_same_v<T, Pbs>) {
                    check_distinct({el.in, el.transmit_to, el.reflect_to}, "PBS");
                } else if constexpr (std::is_same_v<T, PmPbs>) {
                    check_distinct({el.in, el.plus_to, el.minus_to}, "PMPBS");
                } else if constexpr (std::is_same_v<T, Bs>) {
                    check_distinct({el.in_a, el.in_b, el.out_a, el.out_b}, "BS");
                } else if constexpr (std::is_same_v<T, SwitchEl>) {
                    check_distinct({el.from, el.to}, "SW");
                } else if constexpr (std::is_same_v<T, Hwp>) {
                    check_distinct({el.mode}, "HWP");
                } else if constexpr (std::is_same_v<T, WpMirror>) {
                    check_distinct({el.mode}, "WPM");
                } else if constexpr (std::is_same_v<T, SpinH>) {
                    check_spin(el.spin, nl.spin_count, "SH");
                } else if constexpr (std::is_same_v<T, SpinZ>) {
                    check_spin(el.spin, nl.spin_count, "SZ");
                } else if constexpr (std::is_same_v<T, CavityEl>) {
                    check_spin(el.spin, nl.spin_count, "CAV");
                    check_distinct({el.mode}, "CAV");
                }
            },
            step.element);
    }

    // outcome labels unique
    std::set<std::string> labels;
    for (const DetectorSpec& d : nl.detectors) {
        if (!labels.insert(d.label).second) {
            fail(ParseErrorKind::DuplicateOutcomeLabel, 0, 0,
                 "duplicate outcome label '" + d.label + "'");
        }
    }

    // feed-forward covers every detector label, and nothing else
    for (const DetectorSpec& d : nl.detectors) {
        auto it = nl.feedforward.find(d.label);
        if (it == nl.feedforward.end()) {
            fail(ParseErrorKind::UncoveredOutcome, 0, 0,
                 "no feedforward entry for outcome '" + d.label + "'");
        }
        for (const FeedForwardStep& s : it->second) {
            check_spin(s.spin, nl.spin_count, "feedforward");
        }
    }
    for (const auto& [label, ops] : nl.feedforward) {
        if (!labels.count(label)) {
            fail(ParseErrorKind::UncoveredOutcome, 0, 0,
                 "feedforward references unknown outcome '" + label + "'");
        }
    }

    // detector modes must be exactly the terminal modes of a generic run
    Occupancy occ;
    occ.at(nl.input_mode) = {Pol::R, Pol::L};
    for (const NetlistStep& step : nl.steps) occ.step(step.element);
    const std::set<ModeLabel> terminal = occ.terminal();
    std::map<ModeLabel, int> cover;
    for (const DetectorSpec& d : nl.detectors) cover[d.mode] += 1;
    for (const ModeLabel& m : terminal) {
        auto it = cover.find(m);
        if (it == cover.end()) {
            fail(ParseErrorKind::DanglingMode, 0, 0,
                 "terminal mode '" + m + "' is not covered by any detector");
        }
        if (it->second != 1) {
            fail(ParseErrorKind::DanglingMode, 0, 0,
                 "terminal mode '" + m + "' is covered by " + std::to_string(it->second) +
                     " detectors");
        }
    }
    for (const auto& [m, count] : cover) {
        if (!terminal.count(m)) {
            fail(ParseErrorKind::DanglingMode, 0, 0,
                 "detector on mode '" + m + "' which never carries amplitude");
        }
    }
}

std::string serialize_netlist(const Netlist& nl) {
    std::ostringstream os;
    os << "spins " << nl.spin_count << "\n";
    os << "input " << nl.input_mode << " " << pol_token(nl.input_pol) << "\n";
    for (const NetlistStep& step : nl.steps) {
        os << element_keyword(step.element);
        std::visit(
            [&](const auto& el) {
                using T = std::decay_t<decltype(el)>;
                if constexpr (std::is_same_v<T, Pbs>) {
                    os << " " << el.in << " " << el.transmit_to << " " << el.reflect_to;
                } else if constexpr (std::is_same_v<T, PmPbs>) {
                    os << " " << el.in << " " << el.plus_to << " " << el.minus_to;
                } else if constexpr (std::is_same_v<T, Hwp> || std::is_same_v<T, WpMirror>) {
                    os << " " << el.mode;
                } else if constexpr (std::is_same_v<T, Bs>) {
                    os << " " << el.in_a << " " << el.in_b << " " << el.out_a << " " << el.out_b;
                } else if constexpr (std::is_same_v<T, SpinH>) {
                    os << " " << el.spin;
                } else if constexpr (std::is_same_v<T, SpinZ>) {
                    os << " " << el.spin << " " << (el.sign > 0 ? "+" : "-");
                } else if constexpr (std::is_same_v<T, CavityEl>) {
                    os << " " << el.spin << " " << el.mode;
                } else {
                    os << " " << el.from << " " << el.to;
                }
            },
            step.element);
        if (step.checkpoint) os << " @" << *step.checkpoint;
        os << "\n";
    }
    for (const DetectorSpec& d : nl.detectors) {
        os << "detector " << d.label << " " << d.mode << " "
           << (d.basis == PolSign::Plus ? "+" : "-") << "\n";
    }
    for (const DetectorSpec& d : nl.detectors) {
        os << "feedforward " << d.label;
        for (const FeedForwardStep& s : nl.feedforward.at(d.label)) {
            os << " " << s.spin << " ";
            switch (s.op) {
                case FeedForwardOp::I: os << "I"; break;
                case FeedForwardOp::Z: os << "Z"; break;
                case FeedForwardOp::MinusZ: os << "-Z"; break;
            }
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace spingate
