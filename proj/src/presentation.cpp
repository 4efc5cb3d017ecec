#include "kricker/presentation.hpp"

#include <set>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace kricker {

namespace {

void validate(TangleProgram& p) {
    p.widths.clear();
    p.disk_index = -1;
    std::vector<bool> up;
    int k = 0;
    for (const Slice& s : p.slices) {
        int w = static_cast<int>(up.size());
        p.widths.push_back(w);
        if (s.pos < 0) throw ParseError(k, "negative position");
        switch (s.kind) {
        case Slice::Cup:
            if (s.pos > w) throw ParseError(k, "cup position beyond width " + std::to_string(w));
            up.insert(up.begin() + s.pos, {!s.left_down, s.left_down});
            break;
        case Slice::Cap:
            if (s.pos + 1 >= w) throw ParseError(k, "cap strands beyond width " + std::to_string(w));
            if (up[s.pos] == up[s.pos + 1]) throw ParseError(k, "cap joins strands of equal orientation");
            up.erase(up.begin() + s.pos, up.begin() + s.pos + 2);
            break;
        case Slice::CrossPos:
        case Slice::CrossNeg:
            if (s.pos + 1 >= w) throw ParseError(k, "crossing strands beyond width " + std::to_string(w));
            std::swap(up[s.pos], up[s.pos + 1]);
            break;
        case Slice::Disk:
            if (s.width < 0 || s.pos + s.width > w) throw ParseError(k, "disk range beyond width " + std::to_string(w));
            if (p.disk_index >= 0) throw ParseError(k, "multiple disk slices");
            p.disk_index = k;
            break;
        }
        ++k;
    }
    p.widths.push_back(static_cast<int>(up.size()));
    if (p.disk_index < 0) throw ParseError(k, "no disk slice");
    if (!up.empty()) throw ParseError(k, "unclosed strands at top");
}

}  // namespace

TangleProgram make_program(std::vector<Slice> slices) {
    TangleProgram p;
    p.slices = std::move(slices);
    validate(p);
    return p;
}

TangleProgram parse_program(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<Slice> slices;
    while (std::getline(in, line)) {
        if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
        std::istringstream ls(line);
        std::string op;
        if (!(ls >> op)) continue;
        int k = static_cast<int>(slices.size());
        Slice s;
        if (!(ls >> s.pos)) throw ParseError(k, "missing position");
        if (op == "cup") {
            std::string o;
            if (!(ls >> o) || (o != "lr" && o != "rl")) throw ParseError(k, "cup needs orientation lr or rl");
            s.kind = Slice::Cup;
            s.left_down = o == "lr";
        } else if (op == "cap") {
            s.kind = Slice::Cap;
        } else if (op == "x+") {
            s.kind = Slice::CrossPos;
        } else if (op == "x-") {
            s.kind = Slice::CrossNeg;
        } else if (op == "disk") {
            s.kind = Slice::Disk;
            if (!(ls >> s.width)) throw ParseError(k, "disk needs a width");
        } else {
            throw ParseError(k, "unknown slice '" + op + "'");
        }
        std::string extra;
        if (ls >> extra) throw ParseError(k, "trailing text '" + extra + "'");
        slices.push_back(s);
    }
    return make_program(std::move(slices));
}

TangleProgram load_program(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot read " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_program(ss.str());
}

std::string serialize_program(const TangleProgram& p) {
    std::ostringstream os;
    for (const Slice& s : p.slices) {
        switch (s.kind) {
        case Slice::Cup: os << "cup " << s.pos << (s.left_down ? " lr" : " rl"); break;
        case Slice::Cap: os << "cap " << s.pos; break;
        case Slice::CrossPos: os << "x+ " << s.pos; break;
        case Slice::CrossNeg: os << "x- " << s.pos; break;
        case Slice::Disk: os << "disk " << s.pos << " " << s.width; break;
        }
        os << "\n";
    }
    return os.str();
}

namespace {

void rebuild_traversal(ComponentMap& c, int i) {
    ComponentData& comp = c.components[i];
    // Cyclic stream of (leg, event) in traversal order starting at the lowest cup.
    std::vector<std::pair<int, int>> stream;
    std::vector<std::pair<int, int>> marks;  // (leg, slice) boundary positions, aligned with stream indices
    for (int l : comp.legs) {
        const Leg& leg = c.legs[l];
        std::vector<int> ev = leg.events;
        if (!leg.up) std::reverse(ev.begin(), ev.end());
        for (int e : ev) stream.push_back({l, e});
    }
    // Locate the base point as an index into the stream.
    size_t start = 0;
    const BasePoint& b = comp.base;
    if (b.after_slice >= 0) {
        bool found = false;
        for (size_t k = 0; k < stream.size(); ++k)
            if (stream[k].first == b.leg && c.events[stream[k].second].slice == b.after_slice) {
                start = k + 1;
                found = true;
                break;
            }
        if (!found) throw std::logic_error("base point not on its leg");
    } else {
        size_t k = 0;
        for (int l : comp.legs) {
            if (l == b.leg) break;
            k += c.legs[l].events.size();
        }
        start = k;
    }
    comp.events.clear();
    for (size_t n = 0; n < stream.size(); ++n) {
        auto [l, e] = stream[(start + n) % stream.size()];
        const Event& ev = c.events[e];
        TraversalEvent t;
        t.event = e;
        t.kind = ev.kind;
        t.sign = ev.sign;
        t.leg = l;
        if (ev.kind == Event::Crossing) {
            int other = ev.leg_a == l ? ev.leg_b : ev.leg_a;
            t.partner = c.legs[other].component;
        }
        comp.events.push_back(t);
    }
}

}  // namespace

ComponentMap trace_components(const TangleProgram& p) {
    ComponentMap c;
    std::vector<int> cur;
    int k = 0;
    for (const Slice& s : p.slices) {
        c.leg_at.push_back(cur);
        switch (s.kind) {
        case Slice::Cup: {
            int a = static_cast<int>(c.legs.size());
            Leg la, lb;
            la.up = !s.left_down;
            lb.up = s.left_down;
            la.cup_slice = lb.cup_slice = k;
            la.cup_mate = a + 1;
            lb.cup_mate = a;
            c.legs.push_back(la);
            c.legs.push_back(lb);
            cur.insert(cur.begin() + s.pos, {a, a + 1});
            break;
        }
        case Slice::Cap: {
            int a = cur[s.pos], b = cur[s.pos + 1];
            c.legs[a].cap_slice = c.legs[b].cap_slice = k;
            c.legs[a].cap_mate = b;
            c.legs[b].cap_mate = a;
            cur.erase(cur.begin() + s.pos, cur.begin() + s.pos + 2);
            break;
        }
        case Slice::CrossPos:
        case Slice::CrossNeg: {
            Event e;
            e.kind = Event::Crossing;
            e.slice = k;
            e.sign = s.kind == Slice::CrossPos ? 1 : -1;
            e.leg_a = cur[s.pos];
            e.leg_b = cur[s.pos + 1];
            int id = static_cast<int>(c.events.size());
            c.events.push_back(e);
            c.legs[e.leg_a].events.push_back(id);
            c.legs[e.leg_b].events.push_back(id);
            std::swap(cur[s.pos], cur[s.pos + 1]);
            break;
        }
        case Slice::Disk:
            for (int q = s.pos; q < s.pos + s.width; ++q) {
                Event e;
                e.kind = Event::DiskPass;
                e.slice = k;
                e.leg_a = cur[q];
                e.sign = c.legs[cur[q]].up ? 1 : -1;
                int id = static_cast<int>(c.events.size());
                c.events.push_back(e);
                c.legs[cur[q]].events.push_back(id);
            }
            break;
        }
        ++k;
    }
    c.leg_at.push_back(cur);

    // Components in order of their lowest cup.
    for (int l = 0; l < static_cast<int>(c.legs.size()); ++l) {
        if (c.legs[l].component >= 0) continue;
        int id = static_cast<int>(c.components.size());
        ComponentData comp;
        comp.lowest_cup = c.legs[l].cup_slice;
        int start = c.legs[l].up ? l : c.legs[l].cup_mate;
        int x = start;
        do {
            c.legs[x].component = id;
            comp.legs.push_back(x);
            // x is traversed up to its cap, then the mate is traversed down to its cup.
            int down = c.legs[x].cap_mate;
            c.legs[down].component = id;
            comp.legs.push_back(down);
            ++comp.num_caps;
            x = c.legs[down].cup_mate;
        } while (x != start);
        comp.base.leg = start;
        comp.base.after_slice = -1;
        c.components.push_back(comp);
    }
    for (int i = 0; i < c.size(); ++i) {
        rebuild_traversal(c, i);
        int total = 0;
        for (const auto& t : c.components[i].events)
            if (t.kind == Event::DiskPass) total += t.sign;
        if (total != 0)
            throw ParseError(static_cast<int>(p.slices.size()),
                             "component " + std::to_string(i) + " not null-homologous in complement of the trivial knot");
    }
    return c;
}

std::optional<int> move_base_point(ComponentMap& c, int i, int direction) {
    ComponentData& comp = c.components[i];
    auto& ev = comp.events;
    if (ev.empty()) return std::nullopt;
    int n = static_cast<int>(ev.size());
    if (direction > 0) {
        for (int k = 0; k < n; ++k)
            if (ev[k].kind == Event::DiskPass) {
                comp.base.leg = ev[k].leg;
                comp.base.after_slice = c.events[ev[k].event].slice;
                int eps = ev[k].sign;
                rebuild_traversal(c, i);
                return eps;
            }
        return std::nullopt;
    }
    for (int k = n - 1; k >= 0; --k)
        if (ev[k].kind == Event::DiskPass) {
            // New base point sits just before this pass, i.e. just past the preceding event.
            int eps = ev[k].sign;
            int prev = (k - 1 + n) % n;
            if (prev == n - 1 && k == 0) prev = n - 1;
            comp.base.leg = ev[prev].leg;
            comp.base.after_slice = c.events[ev[prev].event].slice;
            if (k == 0) {
                // The pass is the first event: the base point moves to the end of the cycle.
                comp.base.leg = ev[n - 1].leg;
                comp.base.after_slice = c.events[ev[n - 1].event].slice;
            }
            rebuild_traversal(c, i);
            return -eps;
        }
    return std::nullopt;
}

TangleProgram stack_programs(const TangleProgram& lower, const TangleProgram& upper) {
    int d1 = lower.disk_index, d2 = upper.disk_index;
    const Slice& s1 = lower.slices[d1];
    const Slice& s2 = upper.slices[d2];
    int w1 = lower.widths[d1];
    if (s1.width > 0 && s1.pos + s1.width != w1)
        throw std::invalid_argument("left factor's disk must end at its right edge");
    if (s2.width > 0 && s2.pos != 0) throw std::invalid_argument("right factor's disk must start at its left edge");
    std::vector<Slice> out;
    for (int k = 0; k < d1; ++k) out.push_back(lower.slices[k]);
    for (int k = 0; k < d2; ++k) {
        Slice s = upper.slices[k];
        s.pos += w1;
        out.push_back(s);
    }
    Slice disk;
    disk.kind = Slice::Disk;
    if (s1.width == 0 && s2.width == 0) {
        disk.pos = 0;
        disk.width = 0;
    } else {
        disk.pos = s1.width > 0 ? s1.pos : w1;
        disk.width = s1.width + s2.width;
    }
    out.push_back(disk);
    for (size_t k = d1 + 1; k < lower.slices.size(); ++k) out.push_back(lower.slices[k]);
    for (size_t k = d2 + 1; k < upper.slices.size(); ++k) out.push_back(upper.slices[k]);
    return make_program(std::move(out));
}

TangleProgram insert_slices(const TangleProgram& p, int k, const std::vector<Slice>& s) {
    if (k < 0 || k > static_cast<int>(p.slices.size())) throw std::out_of_range("insert_slices: slice index");
    std::vector<Slice> out(p.slices.begin(), p.slices.begin() + k);
    out.insert(out.end(), s.begin(), s.end());
    out.insert(out.end(), p.slices.begin() + k, p.slices.end());
    return make_program(std::move(out));
}

TangleProgram reflect_program(const TangleProgram& p) {
    std::vector<Slice> out;
    for (size_t k = 0; k < p.slices.size(); ++k) {
        Slice s = p.slices[k];
        int w = p.widths[k];
        switch (s.kind) {
            case Slice::Cup:
                s.pos = w - s.pos;
                s.left_down = !s.left_down;
                break;
            case Slice::Disk:
                s.pos = w - s.pos - s.width;
                break;
            default:
                s.pos = w - 2 - s.pos;
        }
        out.push_back(s);
    }
    return make_program(std::move(out));
}

TangleProgram reverse_component(const TangleProgram& p, int component) {
    ComponentMap c = trace_components(p);
    std::vector<Slice> out = p.slices;
    std::set<int> cups;
    for (const Leg& l : c.legs)
        if (l.component == component) cups.insert(l.cup_slice);
    for (int k : cups) out[k].left_down = !out[k].left_down;
    for (const Event& e : c.events) {
        if (e.kind != Event::Crossing) continue;
        int ca = c.legs[e.leg_a].component, cb = c.legs[e.leg_b].component;
        if ((ca == component) != (cb == component)) {
            Slice& s = out[e.slice];
            s.kind = s.kind == Slice::CrossPos ? Slice::CrossNeg : Slice::CrossPos;
        }
    }
    return make_program(std::move(out));
}

}  // namespace kricker
