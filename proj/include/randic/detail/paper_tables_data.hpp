#ifndef RANDIC_DETAIL_PAPER_TABLES_DATA_HPP
#define RANDIC_DETAIL_PAPER_TABLES_DATA_HPP

namespace randic::detail {

// Contents of data/paper_tables.json, embedded at build time.
const char* paper_tables_json();

}  // namespace randic::detail

#endif
