#pragma once

#include "qorder/verify.hpp"

#include <functional>
#include <string>
#include <vector>

namespace qorder::laws {

// Accumulates instances of one law and keeps the first failure.
class Tally {
public:
    bool check(bool ok, const std::function<std::string()>& describe) {
        ++out_.instances;
        if (!ok && out_.status != LawStatus::fail) {
            out_.status = LawStatus::fail;
            out_.witness = describe();
        }
        return ok;
    }
    void note(std::string s) { out_.note = std::move(s); }
    bool failed() const { return out_.status == LawStatus::fail; }
    LawOutcome done() const { return out_; }

private:
    LawOutcome out_;
};

inline LawOutcome skipped(std::string reason) {
    LawOutcome o;
    o.status = LawStatus::skip;
    o.note = std::move(reason);
    return o;
}

// Compact one-line rendering used in witnesses.
std::string show(const QSubset& s);
std::string show(const QRelation& r);
std::string show(const QOrderedSet& x);

// Random ordered sets small enough for powerset work on the quantale.
QOrderedSet small_ordered(LawContext& c, std::size_t max_size = 3, std::size_t powerset_limit = 400);

void add_quantale_laws(std::vector<Law>& out);
void add_qrel_laws(std::vector<Law>& out);
void add_qord_laws(std::vector<Law>& out);
void add_presheaf_laws(std::vector<Law>& out);
void add_completion_laws(std::vector<Law>& out);
void add_galois_laws(std::vector<Law>& out);

}  // namespace qorder::laws
