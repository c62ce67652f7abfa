#include "pact/formula.hpp"

#include "pact/errors.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <functional>
#include <map>

namespace pact {

std::string cmp_str(Cmp c) {
    switch (c) {
    case Cmp::lt: return "<";
    case Cmp::le: return "<=";
    case Cmp::ge: return ">=";
    case Cmp::gt: return ">";
    }
    return "?";
}

bool cmp_holds(const Rat& value, Cmp c, const Rat& bound) {
    switch (c) {
    case Cmp::lt: return value < bound;
    case Cmp::le: return value <= bound;
    case Cmp::ge: return value >= bound;
    case Cmp::gt: return value > bound;
    }
    return false;
}

namespace {
StateRef mk_state(StateFormula f) { return std::make_shared<const StateFormula>(std::move(f)); }
PathRef mk_path(PathFormula f) { return std::make_shared<const PathFormula>(std::move(f)); }
} // namespace

StateRef s_true() { return mk_state({StateFormula::Kind::tt, "", nullptr, nullptr, Cmp::ge, Rat(), nullptr}); }
StateRef s_false() { return mk_state({StateFormula::Kind::ff, "", nullptr, nullptr, Cmp::ge, Rat(), nullptr}); }
StateRef s_atom(std::string name) {
    return mk_state({StateFormula::Kind::atom, std::move(name), nullptr, nullptr, Cmp::ge, Rat(), nullptr});
}
StateRef s_not(StateRef f) {
    return mk_state({StateFormula::Kind::not_, "", std::move(f), nullptr, Cmp::ge, Rat(), nullptr});
}
StateRef s_and(StateRef a, StateRef b) {
    return mk_state({StateFormula::Kind::and_, "", std::move(a), std::move(b), Cmp::ge, Rat(), nullptr});
}
StateRef s_or(StateRef a, StateRef b) {
    return mk_state({StateFormula::Kind::or_, "", std::move(a), std::move(b), Cmp::ge, Rat(), nullptr});
}
StateRef s_prob(Cmp c, Rat bound, PathRef p) {
    if (bound.sign() < 0 || bound > Rat(1))
        throw parse_error(0, "probability bound " + bound.str() + " outside [0,1]");
    return mk_state({StateFormula::Kind::prob, "", nullptr, nullptr, c, std::move(bound), std::move(p)});
}

StateRef s_and_s(StateRef a, StateRef b) {
    using K = StateFormula::Kind;
    if (a->kind == K::ff || b->kind == K::ff) return s_false();
    if (a->kind == K::tt) return b;
    if (b->kind == K::tt) return a;
    return s_and(std::move(a), std::move(b));
}
StateRef s_or_s(StateRef a, StateRef b) {
    using K = StateFormula::Kind;
    if (a->kind == K::tt || b->kind == K::tt) return s_true();
    if (a->kind == K::ff) return b;
    if (b->kind == K::ff) return a;
    return s_or(std::move(a), std::move(b));
}
StateRef s_not_s(StateRef a) {
    using K = StateFormula::Kind;
    if (a->kind == K::tt) return s_false();
    if (a->kind == K::ff) return s_true();
    if (a->kind == K::not_) return a->lhs;
    return s_not(std::move(a));
}

PathRef p_state(StateRef f) {
    return mk_path({PathFormula::Kind::state, std::move(f), nullptr, nullptr, 0});
}
PathRef p_not(PathRef f) { return mk_path({PathFormula::Kind::not_, nullptr, std::move(f), nullptr, 0}); }
PathRef p_and(PathRef a, PathRef b) {
    return mk_path({PathFormula::Kind::and_, nullptr, std::move(a), std::move(b), 0});
}
PathRef p_or(PathRef a, PathRef b) {
    return mk_path({PathFormula::Kind::or_, nullptr, std::move(a), std::move(b), 0});
}
PathRef p_next(PathRef f) { return mk_path({PathFormula::Kind::next, nullptr, std::move(f), nullptr, 0}); }
PathRef p_until(PathRef a, PathRef b) {
    return mk_path({PathFormula::Kind::until, nullptr, std::move(a), std::move(b), 0});
}
PathRef p_buntil(PathRef a, int n, PathRef b) {
    if (n < 0) throw parse_error(0, "negative until bound");
    return mk_path({PathFormula::Kind::buntil, nullptr, std::move(a), std::move(b), n});
}

std::string str(const StateRef& f) {
    using K = StateFormula::Kind;
    switch (f->kind) {
    case K::tt: return "true";
    case K::ff: return "false";
    case K::atom: return f->atom;
    case K::not_: return "!" + str(f->lhs);
    case K::and_: return "(" + str(f->lhs) + " & " + str(f->rhs) + ")";
    case K::or_: return "(" + str(f->lhs) + " | " + str(f->rhs) + ")";
    case K::prob: return "P" + cmp_str(f->cmp) + f->bound.str() + " [ " + str(f->path) + " ]";
    }
    return "?";
}

std::string str(const PathRef& f) {
    using K = PathFormula::Kind;
    switch (f->kind) {
    case K::state: return str(f->state);
    case K::not_: return "!" + str(f->lhs);
    case K::and_: return "(" + str(f->lhs) + " & " + str(f->rhs) + ")";
    case K::or_: return "(" + str(f->lhs) + " | " + str(f->rhs) + ")";
    case K::next: return "X " + str(f->lhs);
    case K::until: return "(" + str(f->lhs) + " U " + str(f->rhs) + ")";
    case K::buntil:
        return "(" + str(f->lhs) + " U<=" + std::to_string(f->bound) + " " + str(f->rhs) + ")";
    }
    return "?";
}

// ---------- parser ----------

namespace {

struct Token {
    enum class T { ident, number, op, lpar, rpar, lbrack, rbrack, end } t;
    std::string text;
    int pos;
};

struct Lexer {
    std::string s;
    std::size_t i = 0;
    std::vector<Token> toks;

    explicit Lexer(std::string in) : s(std::move(in)) { run(); }

    void run() {
        while (i < s.size()) {
            char c = s[i];
            if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
            int pos = static_cast<int>(i);
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::size_t j = i;
                while (j < s.size() &&
                       (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_' || s[j] == '@'))
                    ++j;
                toks.push_back({Token::T::ident, s.substr(i, j - i), pos});
                i = j;
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                std::size_t j = i;
                while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '.' || s[j] == '/')) ++j;
                toks.push_back({Token::T::number, s.substr(i, j - i), pos});
                i = j;
            } else if (c == '(') { toks.push_back({Token::T::lpar, "(", pos}); ++i; }
            else if (c == ')') { toks.push_back({Token::T::rpar, ")", pos}); ++i; }
            else if (c == '[') { toks.push_back({Token::T::lbrack, "[", pos}); ++i; }
            else if (c == ']') { toks.push_back({Token::T::rbrack, "]", pos}); ++i; }
            else if (c == '<' || c == '>') {
                std::string op(1, c);
                if (i + 1 < s.size() && s[i + 1] == '=') { op += "="; ++i; }
                toks.push_back({Token::T::op, op, pos});
                ++i;
            } else if (c == '!' || c == '&' || c == '|') {
                toks.push_back({Token::T::op, std::string(1, c), pos});
                ++i;
            } else {
                throw parse_error(0, "unexpected character '" + std::string(1, c) + "' at position " +
                                         std::to_string(pos));
            }
        }
        toks.push_back({Token::T::end, "", static_cast<int>(s.size())});
    }
};

struct Parser {
    std::vector<Token> toks;
    std::size_t i = 0;

    const Token& peek() const { return toks[i]; }
    Token take() { return toks[i++]; }
    bool at_op(const std::string& o) const {
        return peek().t == Token::T::op && peek().text == o;
    }
    bool at_ident(const std::string& w) const {
        return peek().t == Token::T::ident && peek().text == w;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error(0, msg + " at position " + std::to_string(peek().pos));
    }

    // ---- state level ----
    StateRef state_expr() {
        StateRef l = state_and();
        while (at_op("|")) {
            take();
            l = s_or(l, state_and());
        }
        return l;
    }
    StateRef state_and() {
        StateRef l = state_unary();
        while (at_op("&")) {
            take();
            l = s_and(l, state_unary());
        }
        return l;
    }
    StateRef state_unary() {
        if (at_op("!")) {
            take();
            return s_not(state_unary());
        }
        if (peek().t == Token::T::lpar) {
            take();
            StateRef f = state_expr();
            if (peek().t != Token::T::rpar) fail("expected ')'");
            take();
            return f;
        }
        if (peek().t == Token::T::ident) {
            std::string w = take().text;
            if (w == "true") return s_true();
            if (w == "false") return s_false();
            if (w == "P") {
                if (peek().t != Token::T::op) fail("expected comparison after P");
                std::string op = take().text;
                Cmp c = op == "<" ? Cmp::lt : op == "<=" ? Cmp::le : op == ">=" ? Cmp::ge
                        : op == ">" ? Cmp::gt
                                    : (fail("bad comparison '" + op + "'"), Cmp::ge);
                if (peek().t != Token::T::number) fail("expected probability bound");
                Rat q;
                try {
                    q = Rat::parse(take().text);
                } catch (const std::invalid_argument& e) {
                    fail(e.what());
                }
                if (peek().t != Token::T::lbrack) fail("expected '[' before path formula");
                take();
                PathRef p = path_expr();
                if (peek().t != Token::T::rbrack) fail("expected ']' after path formula");
                take();
                return s_prob(c, q, p);
            }
            return s_atom(w);
        }
        fail("expected state formula");
    }

    // ---- path level; pure-state subtrees collapse back to state formulae ----
    PathRef path_expr() {
        PathRef l = path_and();
        while (at_op("|")) {
            take();
            l = mk_or(l, path_and());
        }
        return l;
    }
    PathRef path_and() {
        PathRef l = path_until();
        while (at_op("&")) {
            take();
            l = mk_and(l, path_until());
        }
        return l;
    }
    PathRef path_until() {
        PathRef l = path_unary();
        if (at_ident("U")) {
            take();
            int bound = -1;
            if (at_op("<=")) {
                take();
                if (peek().t != Token::T::number) fail("expected until bound");
                std::string b = take().text;
                if (b.find('.') != std::string::npos || b.find('/') != std::string::npos)
                    fail("until bound must be a natural number");
                bound = std::stoi(b);
            }
            PathRef r = path_until(); // right associative
            return bound < 0 ? p_until(l, r) : p_buntil(l, bound, r);
        }
        return l;
    }
    PathRef path_unary() {
        if (at_op("!")) {
            take();
            PathRef f = path_unary();
            if (f->kind == PathFormula::Kind::state) return p_state(s_not(f->state));
            return p_not(f);
        }
        if (at_ident("X")) {
            take();
            return p_next(path_unary());
        }
        if (peek().t == Token::T::lpar) {
            take();
            PathRef f = path_expr();
            if (peek().t != Token::T::rpar) fail("expected ')'");
            take();
            return f;
        }
        if (peek().t == Token::T::ident) {
            // embedded state formula (atom, true/false or P...)
            StateRef f = state_unary();
            return p_state(f);
        }
        fail("expected path formula");
    }

    static PathRef mk_and(PathRef a, PathRef b) {
        if (a->kind == PathFormula::Kind::state && b->kind == PathFormula::Kind::state)
            return p_state(s_and(a->state, b->state));
        return p_and(std::move(a), std::move(b));
    }
    static PathRef mk_or(PathRef a, PathRef b) {
        if (a->kind == PathFormula::Kind::state && b->kind == PathFormula::Kind::state)
            return p_state(s_or(a->state, b->state));
        return p_or(std::move(a), std::move(b));
    }
};

} // namespace

StateRef parse_formula(const std::string& text) {
    Parser p{Lexer(text).toks};
    StateRef f = p.state_expr();
    if (p.peek().t != Token::T::end) p.fail("trailing input");
    return f;
}

StateFormula parse_formula_tree(const std::string& text) { return *parse_formula(text); }

PathRef parse_path_formula(const std::string& text) {
    Parser p{Lexer(text).toks};
    PathRef f = p.path_expr();
    if (p.peek().t != Token::T::end) p.fail("trailing input");
    return f;
}

// ---------- depth ----------

int depth(const PathRef& psi) {
    using K = PathFormula::Kind;
    switch (psi->kind) {
    case K::state: return 0;
    case K::not_: return depth(psi->lhs);
    case K::and_:
    case K::or_: return std::max(depth(psi->lhs), depth(psi->rhs));
    case K::next: return 1 + depth(psi->lhs);
    case K::until:
    case K::buntil: throw fragment_error(str(psi), "depth undefined for until");
    }
    return 0;
}

// ---------- classification ----------

namespace {

struct Shape {
    bool boolean_only = true;   // no prob operator at all below
    bool pctl_paths = true;     // every path formula is X phi | phi U phi | phi U<=n phi
    bool has_until = false;     // unbounded U anywhere
    bool has_buntil = false;
    bool has_next = false;
    int max_buntil = 0;
    int max_depth = 0;          // max Depth over U-free path formulae; -1 if some has U
    bool u_free = true;
    bool safe_state = true;     // negation only on atoms, P>= only
    bool safe_paths = true;     // path grammar of the safe fragments
};

bool is_state(const PathRef& p) { return p->kind == PathFormula::Kind::state; }

void scan_state(const StateRef& f, Shape& sh, bool neg_ok_here);

void scan_path(const PathRef& p, Shape& sh) {
    using K = PathFormula::Kind;
    switch (p->kind) {
    case K::state: scan_state(p->state, sh, false); return;
    case K::not_:
        sh.safe_paths = false;
        scan_path(p->lhs, sh);
        return;
    case K::and_:
    case K::or_:
        scan_path(p->lhs, sh);
        scan_path(p->rhs, sh);
        return;
    case K::next:
        sh.has_next = true;
        scan_path(p->lhs, sh);
        return;
    case K::until:
        sh.has_until = true;
        sh.u_free = false;
        scan_path(p->lhs, sh);
        scan_path(p->rhs, sh);
        return;
    case K::buntil:
        sh.has_buntil = true;
        sh.u_free = false;
        sh.max_buntil = std::max(sh.max_buntil, p->bound);
        scan_path(p->lhs, sh);
        scan_path(p->rhs, sh);
        return;
    }
}

bool path_is_pctl(const PathRef& p) {
    using K = PathFormula::Kind;
    if (p->kind == K::next) return is_state(p->lhs);
    if (p->kind == K::until || p->kind == K::buntil) return is_state(p->lhs) && is_state(p->rhs);
    return false;
}

bool path_is_safe(const PathRef& p) {
    using K = PathFormula::Kind;
    switch (p->kind) {
    case K::state: return true;
    case K::and_:
    case K::or_: return path_is_safe(p->lhs) && path_is_safe(p->rhs);
    case K::next: return path_is_safe(p->lhs);
    case K::until: return path_is_safe(p->lhs) && path_is_safe(p->rhs);
    case K::buntil: return path_is_safe(p->lhs) && path_is_safe(p->rhs);
    case K::not_: return false;
    }
    return false;
}

int path_depth_or_zero(const PathRef& p) {
    using K = PathFormula::Kind;
    switch (p->kind) {
    case K::state: return 0;
    case K::not_: return path_depth_or_zero(p->lhs);
    case K::and_:
    case K::or_: return std::max(path_depth_or_zero(p->lhs), path_depth_or_zero(p->rhs));
    case K::next: return 1 + path_depth_or_zero(p->lhs);
    default: return 0; // callers only use this on U-free formulae
    }
}

void scan_state(const StateRef& f, Shape& sh, bool under_neg) {
    using K = StateFormula::Kind;
    switch (f->kind) {
    case K::tt:
    case K::ff:
    case K::atom: return;
    case K::not_:
        if (f->lhs->kind != K::atom) sh.safe_state = false;
        scan_state(f->lhs, sh, true);
        return;
    case K::and_:
    case K::or_:
        scan_state(f->lhs, sh, under_neg);
        scan_state(f->rhs, sh, under_neg);
        return;
    case K::prob: {
        sh.boolean_only = false;
        if (f->cmp != Cmp::ge) sh.safe_state = false;
        if (under_neg) sh.safe_state = false;
        if (!path_is_pctl(f->path)) sh.pctl_paths = false;
        if (!path_is_safe(f->path)) sh.safe_paths = false;
        scan_path(f->path, sh);
        if (f->path->kind != PathFormula::Kind::until &&
            f->path->kind != PathFormula::Kind::buntil) {
            // contributes to the star-depth if U-free below
            Shape sub;
            scan_path(f->path, sub);
            if (sub.u_free) sh.max_depth = std::max(sh.max_depth, path_depth_or_zero(f->path));
        }
        return;
    }
    }
}

bool safe_pctl_paths_only(const StateRef& f);
bool safe_pctl_paths_only_path(const PathRef& p) {
    using K = PathFormula::Kind;
    if (p->kind == K::next) return is_state(p->lhs) && safe_pctl_paths_only(p->lhs->state);
    if (p->kind == K::until || p->kind == K::buntil)
        return is_state(p->lhs) && is_state(p->rhs) && safe_pctl_paths_only(p->lhs->state) &&
               safe_pctl_paths_only(p->rhs->state);
    return false;
}
bool safe_pctl_paths_only(const StateRef& f) {
    using K = StateFormula::Kind;
    switch (f->kind) {
    case K::tt:
    case K::ff:
    case K::atom: return true;
    case K::not_: return safe_pctl_paths_only(f->lhs);
    case K::and_:
    case K::or_: return safe_pctl_paths_only(f->lhs) && safe_pctl_paths_only(f->rhs);
    case K::prob: return safe_pctl_paths_only_path(f->path);
    }
    return false;
}

bool pctl_paths_everywhere(const StateRef& f) { return safe_pctl_paths_only(f); }

} // namespace

std::set<FragmentTag> classify(const StateRef& f) {
    Shape sh;
    scan_state(f, sh, false);
    std::set<FragmentTag> tags;
    bool pctl = pctl_paths_everywhere(f);
    if (pctl) {
        tags.insert({Fragment::pctl, {}});
        if (!sh.has_until) {
            tags.insert({Fragment::pctl_minus, {}});
            int i = std::max(sh.max_buntil, sh.has_next ? 1 : 0);
            tags.insert({Fragment::pctl_minus_i, i});
        }
        if (!sh.has_next && !sh.has_buntil) tags.insert({Fragment::pctl_no_x, {}});
    }
    if (!sh.has_buntil) {
        tags.insert({Fragment::pctl_star, {}});
        if (!sh.has_until) {
            tags.insert({Fragment::pctl_star_minus, {}});
            tags.insert({Fragment::pctl_star_minus_i, sh.max_depth});
        }
        if (!sh.has_next) tags.insert({Fragment::pctl_star_no_x, {}});
    }
    if (sh.safe_state && sh.safe_paths) {
        tags.insert({Fragment::pctl_star_safe, {}});
        if (pctl) tags.insert({Fragment::pctl_safe, {}});
    }
    return tags;
}

bool has_tag(const std::set<FragmentTag>& tags, Fragment f) {
    for (auto& t : tags)
        if (t.frag == f) return true;
    return false;
}

std::string FragmentTag::str() const {
    std::string base;
    switch (frag) {
    case Fragment::pctl: base = "PCTL"; break;
    case Fragment::pctl_minus: base = "PCTL-"; break;
    case Fragment::pctl_minus_i: base = "PCTL-_i"; break;
    case Fragment::pctl_star: base = "PCTL*"; break;
    case Fragment::pctl_star_minus: base = "PCTL*-"; break;
    case Fragment::pctl_star_minus_i: base = "PCTL*-_i"; break;
    case Fragment::pctl_no_x: base = "PCTL\\X"; break;
    case Fragment::pctl_star_no_x: base = "PCTL*\\X"; break;
    case Fragment::pctl_safe: base = "PCTLs"; break;
    case Fragment::pctl_star_safe: base = "PCTL*s"; break;
    }
    if (index) base += "(" + std::to_string(*index) + ")";
    return base;
}

// ---------- depth-1 normal form ----------

namespace {

// literal form of a depth<=1 U-free path formula: a conjunction of a state
// part and at most one X over a state part
struct Lit {
    StateRef now;  // state constraint at position 0
    StateRef next; // state constraint at position 1 (may be null = none)
};

PathRef push_neg(const PathRef& p, bool neg) {
    using K = PathFormula::Kind;
    switch (p->kind) {
    case K::state: return p_state(neg ? s_not(p->state) : p->state);
    case K::not_: return push_neg(p->lhs, !neg);
    case K::and_: {
        auto l = push_neg(p->lhs, neg), r = push_neg(p->rhs, neg);
        return neg ? p_or(l, r) : p_and(l, r);
    }
    case K::or_: {
        auto l = push_neg(p->lhs, neg), r = push_neg(p->rhs, neg);
        return neg ? p_and(l, r) : p_or(l, r);
    }
    case K::next: return p_next(push_neg(p->lhs, neg)); // !X = X!
    default: throw fragment_error(str(p), "depth-1 normalization needs a U-free formula");
    }
}

void dnf(const PathRef& p, std::vector<Lit>& out) {
    using K = PathFormula::Kind;
    if (p->kind == K::or_) {
        dnf(p->lhs, out);
        dnf(p->rhs, out);
        return;
    }
    if (p->kind == K::and_) {
        std::vector<Lit> l, r;
        dnf(p->lhs, l);
        dnf(p->rhs, r);
        for (auto& a : l)
            for (auto& b : r) {
                Lit c;
                c.now = a.now && b.now ? s_and(a.now, b.now) : (a.now ? a.now : b.now);
                c.next = a.next && b.next ? s_and(a.next, b.next) : (a.next ? a.next : b.next);
                out.push_back(c);
            }
        return;
    }
    if (p->kind == K::next) {
        if (p->lhs->kind != K::state)
            throw fragment_error(str(p), "depth exceeds 1");
        out.push_back({nullptr, p->lhs->state});
        return;
    }
    if (p->kind == K::state) {
        out.push_back({p->state, nullptr});
        return;
    }
    throw fragment_error(str(p), "unexpected path node in depth-1 normalization");
}

} // namespace

StateRef normalize_depth1(const StateRef& f) {
    using K = StateFormula::Kind;
    switch (f->kind) {
    case K::tt:
    case K::ff:
    case K::atom: return f;
    case K::not_: return s_not(normalize_depth1(f->lhs));
    case K::and_: return s_and(normalize_depth1(f->lhs), normalize_depth1(f->rhs));
    case K::or_: return s_or(normalize_depth1(f->lhs), normalize_depth1(f->rhs));
    case K::prob: break;
    }
    if (depth(f->path) > 1) throw fragment_error(str(f->path), "depth exceeds 1");
    // normalize the path into disjuncts (gamma_j & X beta_j); recurse into
    // embedded state formulae first
    std::function<PathRef(const PathRef&)> rec_states = [&](const PathRef& p) -> PathRef {
        using PK = PathFormula::Kind;
        switch (p->kind) {
        case PK::state: return p_state(normalize_depth1(p->state));
        case PK::not_: return p_not(rec_states(p->lhs));
        case PK::and_: return p_and(rec_states(p->lhs), rec_states(p->rhs));
        case PK::or_: return p_or(rec_states(p->lhs), rec_states(p->rhs));
        case PK::next: return p_next(rec_states(p->lhs));
        default: throw fragment_error(str(p), "U not allowed in depth-1 normalization");
        }
    };
    PathRef flat = push_neg(rec_states(f->path), false);
    std::vector<Lit> lits;
    dnf(flat, lits);
    const std::size_t m = lits.size();
    if (m > 16) throw resource_cap_error("normalize-depth1", "too many disjuncts");
    // P cmp q over a union of (gamma_j & X beta_j) splits by which gammas hold
    StateRef result = s_false();
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
        StateRef cond = s_true();
        bool have_next = false;
        StateRef next_union = nullptr;
        bool whole_cone = false; // some active disjunct has no X constraint
        for (std::size_t j = 0; j < m; ++j) {
            bool active = (mask >> j) & 1;
            StateRef g = lits[j].now ? lits[j].now : s_true();
            cond = s_and_s(cond, active ? g : s_not_s(g));
            if (active) {
                if (!lits[j].next) whole_cone = true;
                else {
                    next_union = next_union ? s_or_s(next_union, lits[j].next) : lits[j].next;
                    have_next = true;
                }
            }
        }
        if (cond->kind == StateFormula::Kind::ff) continue;
        StateRef val;
        if (whole_cone) {
            // measure is 1
            val = cmp_holds(Rat(1), f->cmp, f->bound) ? s_true() : s_false();
        } else if (!have_next) {
            // measure is 0
            val = cmp_holds(Rat(0), f->cmp, f->bound) ? s_true() : s_false();
        } else {
            val = s_prob(f->cmp, f->bound, p_next(p_state(next_union)));
        }
        result = s_or_s(result, s_and_s(cond, val));
    }
    return result;
}

} // namespace pact
