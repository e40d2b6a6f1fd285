#pragma once

namespace qlen {

enum class Statistics { fermion, boson };

} // namespace qlen
