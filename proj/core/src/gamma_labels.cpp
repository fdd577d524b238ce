#include "schatten/walk_weights.hpp"

// Association between the formula labels of the transcription tables and
// the canonical pattern keys of the catalog. Derived once by matching
// formula values against oracle buckets on generic random matrices (the
// match is unique by Schwartz-Zippel); the walk_weights tests re-derive
// the matching on fresh inputs and fail if any row drifts.

namespace schatten {
namespace detail {
namespace {

using LabelKeys = std::vector<std::pair<const char*, const char*>>;

const LabelKeys k3_labels = {
    {"A_1", "v1:0-0x3"},
    {"A_2", "v2:0-0x1,0-1x2"},
    {"A_3", "v3:0-1x1,0-2x1,1-2x1"},
};

const LabelKeys k4_labels = {
    {"B_1", "v1:0-0x4"},
    {"B_2", "v2:0-1x4"},
    {"B_3", "v2:0-0x2,0-1x2"},
    {"B_4", "v3:0-1x2,0-2x2"},
    {"B_5", "v2:0-0x1,0-1x2,1-1x1"},
    {"B_6", "v4:0-1x1,0-2x1,1-3x1,2-3x1"},
    {"B_7", "v3:0-0x1,0-1x1,0-2x1,1-2x1"},
};

const LabelKeys k5_labels = {
    {"C_1", "v1:0-0x5"},
    {"C_2", "v2:0-0x1,0-1x4"},
    {"C_3", "v2:0-0x3,0-1x2"},
    {"C_4", "v3:0-1x1,0-2x1,1-2x3"},
    {"C_5", "v2:0-0x1,0-1x2,1-1x2"},
    {"C_6", "v3:0-0x1,0-1x2,0-2x2"},
    {"C_7", "v3:0-0x1,0-1x2,1-2x2"},
    {"C_8", "v3:0-0x2,0-1x1,0-2x1,1-2x1"},
    {"C_9", "v4:0-1x1,0-2x1,0-3x2,1-2x1"},
    {"C_10", "v5:0-1x1,0-2x1,1-3x1,2-4x1,3-4x1"},
    {"C_11", "v3:0-0x1,0-1x1,0-2x1,1-1x1,1-2x1"},
    {"C_12", "v4:0-0x1,0-1x1,0-2x1,1-3x1,2-3x1"},
};

const LabelKeys k6_labels = {
    {"D_1", "v1:0-0x6"},
    {"D_2", "v2:0-1x6"},
    {"D_3", "v3:0-1x2,0-2x4"},
    {"D_4", "v2:0-0x4,0-1x2"},
    {"D_5", "v2:0-0x2,0-1x4"},
    {"D_6", "v2:0-0x2,0-1x2,1-1x2"},
    {"D_7", "v3:0-0x2,0-1x2,1-2x2"},
    {"D_8", "v3:0-0x2,0-1x2,0-2x2"},
    {"D_9", "v2:0-0x1,0-1x2,1-1x3"},
    {"D_10", "v2:0-0x1,0-1x4,1-1x1"},
    {"D_11", "v4:0-1x2,0-2x2,1-3x2"},
    {"D_12", "v3:0-1x2,0-2x2,1-2x2"},
    {"D_13", "v4:0-1x2,0-2x2,0-3x2"},
    {"D_14", "v3:0-0x1,0-1x2,1-2x2,2-2x1"},
    {"D_15", "v3:0-0x1,0-1x2,0-2x2,1-1x1"},
    {"D_16", "v4:0-1x1,0-2x1,1-3x1,2-3x3"},
    {"D_17", "v3:0-0x3,0-1x1,0-2x1,1-2x1"},
    {"D_18", "v3:0-0x1,0-1x1,0-2x3,1-2x1"},
    {"D_19", "v3:0-0x1,0-1x1,0-2x1,1-2x3"},
    {"D_20", "v4:0-0x2,0-1x1,0-2x1,1-3x1,2-3x1"},
    {"D_21", "v3:0-0x1,0-1x1,0-2x1,1-1x2,1-2x1"},
    {"D_22", "v5:0-1x1,0-2x1,0-3x2,1-4x1,2-4x1"},
    {"D_23", "v4:0-1x1,0-2x1,0-3x2,1-3x1,2-3x1"},
    {"D_24", "v4:0-0x1,0-1x1,0-2x1,1-2x1,1-3x2"},
    {"D_25", "v4:0-0x1,0-1x2,1-2x1,1-3x1,2-3x1"},
    {"D_26", "v4:0-0x1,0-1x1,0-2x1,0-3x2,1-2x1"},
    {"D_27", "v5:0-1x1,0-2x1,0-3x1,0-4x1,1-2x1,3-4x1"},
    {"D_28", "v6:0-1x1,0-2x1,1-3x1,2-4x1,3-5x1,4-5x1"},
    {"D_29", "v3:0-0x1,0-1x1,0-2x1,1-1x1,1-2x1,2-2x1"},
    {"D_30", "v4:0-0x1,0-1x1,0-2x1,1-3x1,2-3x1,3-3x1"},
    {"D_31", "v4:0-0x1,0-1x1,0-2x1,1-1x1,1-3x1,2-3x1"},
    {"D_32", "v5:0-0x1,0-1x1,0-2x1,1-3x1,2-4x1,3-4x1"},
};

const LabelKeys k7_labels = {
    {"E_1", "v1:0-0x7"},
    {"E_2", "v2:0-0x5,0-1x2"},
    {"E_3", "v2:0-0x2,0-1x2,1-1x3"},
    {"E_4", "v2:0-0x3,0-1x4"},
    {"E_5", "v2:0-0x1,0-1x6"},
    {"E_6", "v2:0-0x1,0-1x2,1-1x4"},
    {"E_7", "v2:0-0x1,0-1x4,1-1x2"},
    {"E_8", "v3:0-0x3,0-1x2,1-2x2"},
    {"E_9", "v3:0-0x3,0-1x2,0-2x2"},
    {"E_10", "v3:0-0x1,0-1x2,1-2x4"},
    {"E_11", "v3:0-0x1,0-1x2,0-2x4"},
    {"E_12", "v3:0-0x1,0-1x4,1-2x2"},
    {"E_13", "v3:0-1x1,0-2x1,1-2x5"},
    {"E_14", "v3:0-1x1,0-2x3,1-2x3"},
    {"E_15", "v4:0-0x1,0-1x2,1-2x2,2-3x2"},
    {"E_16", "v4:0-0x1,0-1x2,0-2x2,1-3x2"},
    {"E_17", "v4:0-0x1,0-1x2,0-2x2,0-3x2"},
    {"E_18", "v4:0-0x1,0-1x2,1-2x2,1-3x2"},
    {"E_19", "v3:0-0x1,0-1x2,0-2x2,1-2x2"},
    {"E_20", "v3:0-0x1,0-1x2,1-1x2,1-2x2"},
    {"E_21", "v3:0-0x1,0-1x2,0-2x2,1-1x2"},
    {"E_22", "v3:0-0x1,0-1x2,1-2x2,2-2x2"},
    {"E_23", "v3:0-0x4,0-1x1,0-2x1,1-2x1"},
    {"E_24", "v4:0-1x1,0-2x1,1-2x3,1-3x2"},
    {"E_25", "v4:0-1x1,0-2x1,0-3x2,1-2x3"},
    {"E_26", "v3:0-0x2,0-1x1,0-2x1,1-2x3"},
    {"E_27", "v3:0-0x2,0-1x1,0-2x3,1-2x1"},
    {"E_28", "v4:0-1x1,0-2x1,0-3x4,1-2x1"},
    {"E_29", "v3:0-0x1,0-1x2,0-2x2,1-1x1,2-2x1"},
    {"E_30", "v3:0-0x1,0-1x1,0-2x1,1-1x1,1-2x3"},
    {"E_31", "v3:0-0x1,0-1x1,0-2x3,1-2x1,2-2x1"},
    {"E_32", "v4:0-0x2,0-1x1,0-2x1,1-2x1,1-3x2"},
    {"E_33", "v3:0-0x1,0-1x1,0-2x1,1-1x3,1-2x1"},
    {"E_34", "v3:0-0x2,0-1x1,0-2x1,1-1x2,1-2x1"},
    {"E_35", "v4:0-0x3,0-1x1,0-2x1,1-3x1,2-3x1"},
    {"E_36", "v4:0-0x1,0-1x1,0-2x1,1-3x1,2-3x3"},
    {"E_37", "v4:0-0x1,0-1x1,0-2x3,1-3x1,2-3x1"},
    {"E_38", "v5:0-1x1,0-2x1,1-3x1,2-4x1,3-4x3"},
    {"E_39", "v5:0-1x1,0-2x1,0-3x2,1-2x1,1-4x2"},
    {"E_40", "v4:0-0x2,0-1x1,0-2x1,0-3x2,1-2x1"},
    {"E_41", "v4:0-0x2,0-1x2,1-2x1,1-3x1,2-3x1"},
    {"E_42", "v5:0-1x1,0-2x1,0-3x2,1-2x1,3-4x2"},
    {"E_43", "v5:0-1x1,0-2x1,0-3x2,0-4x2,1-2x1"},
    {"E_44", "v4:0-1x1,0-2x1,0-3x2,1-2x1,1-3x2"},
    {"E_45", "v6:0-1x1,0-2x1,0-3x2,1-4x1,2-5x1,4-5x1"},
    {"E_46", "v5:0-1x1,0-2x1,0-3x2,1-3x1,2-4x1,3-4x1"},
    {"E_47", "v5:0-0x2,0-1x1,0-2x1,1-3x1,2-4x1,3-4x1"},
    {"E_48", "v3:0-0x1,0-1x1,0-2x1,1-1x1,1-2x1,2-2x2"},
    {"E_49", "v4:0-0x1,0-1x1,0-2x1,0-3x2,1-2x1,3-3x1"},
    {"E_50", "v4:0-0x1,0-1x1,0-2x1,1-2x1,1-3x2,3-3x1"},
    {"E_51", "v4:0-0x1,0-1x1,0-2x1,0-3x2,1-1x1,1-2x1"},
    {"E_52", "v4:0-0x1,0-1x1,0-2x1,1-1x1,1-2x1,2-3x2"},
    {"E_53", "v4:0-0x1,0-1x1,0-2x1,1-1x2,1-3x1,2-3x1"},
    {"E_54", "v4:0-0x1,0-1x1,0-2x1,1-3x1,2-3x1,3-3x2"},
    {"E_55", "v5:0-0x1,0-1x2,1-2x1,1-3x1,2-4x1,3-4x1"},
    {"E_56", "v5:0-0x1,0-1x1,0-2x1,0-3x2,1-4x1,2-4x1"},
    {"E_57", "v5:0-0x1,0-1x1,0-2x1,1-3x1,1-4x2,2-3x1"},
    {"E_58", "v5:0-0x1,0-1x1,0-2x1,1-3x1,2-3x1,3-4x2"},
    {"E_59", "v4:0-0x1,0-1x1,0-2x1,0-3x2,1-3x1,2-3x1"},
    {"E_60", "v4:0-0x1,0-1x1,0-2x1,1-2x2,1-3x1,2-3x1"},
    {"E_61", "v5:0-1x1,0-2x1,0-3x1,0-4x1,1-2x1,1-3x1,1-4x1"},
    {"E_62", "v6:0-1x1,0-2x1,0-3x1,0-4x1,1-2x1,3-5x1,4-5x1"},
    {"E_63", "v7:0-1x1,0-2x1,1-3x1,2-4x1,3-5x1,4-6x1,5-6x1"},
    {"E_64", "v4:0-0x1,0-1x1,0-2x1,1-1x1,1-3x1,2-2x1,2-3x1"},
    {"E_65", "v5:0-0x1,0-1x1,0-2x1,1-3x1,2-4x1,3-3x1,3-4x1"},
    {"E_66", "v5:0-0x1,0-1x1,0-2x1,0-3x1,0-4x1,1-2x1,3-4x1"},
    {"E_67", "v5:0-0x1,0-1x1,0-2x1,1-2x1,1-3x1,1-4x1,3-4x1"},
    {"E_68", "v5:0-0x1,0-1x1,0-2x1,1-1x1,1-3x1,2-4x1,3-4x1"},
    {"E_69", "v6:0-0x1,0-1x1,0-2x1,1-3x1,2-4x1,3-5x1,4-5x1"},
};

} // namespace

const LabelKeys& closed_form_label_keys(int k) {
    switch (k) {
        case 3: return k3_labels;
        case 4: return k4_labels;
        case 5: return k5_labels;
        case 6: return k6_labels;
        case 7: return k7_labels;
        default: throw std::invalid_argument("closed_form_label_keys: k must be in 3..7");
    }
}

} // namespace detail
} // namespace schatten
