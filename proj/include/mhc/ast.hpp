#ifndef MHC_AST_HPP
#define MHC_AST_HPP

#include <memory>
#include <string>
#include <variant>

#include "mhc/errors.hpp"

namespace mhc {

/// Variety-level syntax: the generators of the blow-up presentation.
struct VarietyExpr {
    struct Point {};
    struct ProjSpace {
        int n;
    };
    struct Curve {
        int genus;
    };
    struct Blowup {
        std::shared_ptr<const VarietyExpr> ambient;
        std::shared_ptr<const VarietyExpr> center;
        int codim;
    };
    struct Prod {
        std::shared_ptr<const VarietyExpr> left;
        std::shared_ptr<const VarietyExpr> right;
    };
    struct Ref {
        std::string name;
    };

    using Node = std::variant<Point, ProjSpace, Curve, Blowup, Prod, Ref>;

    Node node;
    SourceLoc loc;
};

/// Ring-level syntax over variety atoms: integers, Lefschetz powers, sums,
/// differences and products.
struct RingExpr {
    struct IntLit {
        long long value;
    };
    struct Lefschetz {
        long long power;
    };
    struct Variety {
        VarietyExpr expr;
    };
    struct Negate {
        std::shared_ptr<const RingExpr> operand;
    };
    struct Binary {
        char op;  // '+', '-' or '*'
        std::shared_ptr<const RingExpr> lhs;
        std::shared_ptr<const RingExpr> rhs;
    };

    using Node = std::variant<IntLit, Lefschetz, Variety, Negate, Binary>;

    Node node;
    SourceLoc loc;
};

}  // namespace mhc

#endif
