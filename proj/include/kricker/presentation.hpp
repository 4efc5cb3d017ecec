#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kricker {

struct ParseError : std::runtime_error {
    ParseError(int slice, const std::string& msg)
        : std::runtime_error("slice " + std::to_string(slice) + ": " + msg), slice_index(slice) {}
    int slice_index;
};

struct Slice {
    enum Kind { Cup, Cap, CrossPos, CrossNeg, Disk };
    Kind kind = Cup;
    int pos = 0;
    int width = 0;           // disk range width
    bool left_down = false;  // cup "lr": left leg down, right leg up
};

struct TangleProgram {
    std::vector<Slice> slices;
    std::vector<int> widths;  // widths[k] is the number of strands below slice k; widths.back() is the top
    int disk_index = -1;
};

TangleProgram parse_program(const std::string& text);
TangleProgram load_program(const std::string& path);
std::string serialize_program(const TangleProgram& p);
// Builds a validated program from slices (same checks as parsing).
TangleProgram make_program(std::vector<Slice> slices);

struct Leg {
    int component = -1;
    bool up = true;
    int cup_slice = -1;
    int cap_slice = -1;
    int cup_mate = -1;  // other leg of the same cup
    int cap_mate = -1;  // other leg of the same cap
    std::vector<int> events;  // indices into ComponentMap::events, bottom to top
};

struct Event {
    enum Kind { Crossing, DiskPass };
    Kind kind = Crossing;
    int slice = -1;
    int sign = 0;  // crossing sign sg(c) or disk-pass sign
    int leg_a = -1, leg_b = -1;  // crossing: legs at pos, pos+1; disk pass: leg_a only
};

struct TraversalEvent {
    int event = -1;
    Event::Kind kind = Event::Crossing;
    int sign = 0;
    int partner = -1;  // component of the other strand at a crossing
    int leg = -1;
};

struct BasePoint {
    int leg = -1;
    int after_slice = -1;  // -1: at the minimum of the leg's cup; otherwise just past this slice along the leg
};

struct ComponentData {
    int lowest_cup = -1;
    int num_caps = 0;
    std::vector<int> legs;  // cyclic order starting with the up leg of the lowest cup
    BasePoint base;
    std::vector<TraversalEvent> events;  // traversal order from the base point
};

struct ComponentMap {
    std::vector<Leg> legs;
    std::vector<Event> events;
    std::vector<ComponentData> components;
    std::vector<std::vector<int>> leg_at;  // leg_at[k][p]: leg at strand p below slice k (last entry: top)
    int size() const { return static_cast<int>(components.size()); }
};

ComponentMap trace_components(const TangleProgram& p);
// Moves the base point of component i along (direction +1) or against (-1) the orientation
// past the nearest disk intersection. Returns the exponent e to feed to the winding base-point move,
// or nullopt when the component has no disk intersection.
std::optional<int> move_base_point(ComponentMap& c, int i, int direction);

// Program utilities used by the corpus and the move checks.
TangleProgram stack_programs(const TangleProgram& lower, const TangleProgram& upper);
TangleProgram reverse_component(const TangleProgram& p, int component);
// Inserts slices before slice k.
TangleProgram insert_slices(const TangleProgram& p, int k, const std::vector<Slice>& s);
// Left-right flip keeping crossing signs; an isotopy that moves the disk to the other side.
TangleProgram reflect_program(const TangleProgram& p);

}  // namespace kricker
