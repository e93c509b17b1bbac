#pragma once

// Typeset table bodies, rows separated by \\ with continuation rows
// carrying an empty first cell.

#include <map>

namespace reference {

inline const std::map<int, const char*>& table_bodies() {
    static const std::map<int, const char*> bodies = {
        {1, R"(
1 & q^2 - 2q + 1 & 4 \\
2 & q^4 - q^3 - q + 1 & 4  \\
3 & q^6 - q^5 - q^4 + 2 q^3 - q^2 - q + 1 &  0  \\
4 & q^8 - q^7- q + 1 & 4  \\
5 & q^{10} - q^9 - q^7+ q^6 +  q^4 - q^3 - q + 1 & 8   \\
6 & q^{12} - q^{11} + q^7 - 2 q^6 + q^5 - q + 1 &  0 \\
7 & q^{14} - q^{13} - q^{10} + q^9 + q^5 - q^4 - q + 1  & 0  \\
8 &  q^{16} - q^{15} - q + 1 &  4 \\
9 &  q^{18} - q^{17} - q^{13} + q^{12} + q^{11} -  q^{10} -  q^8 + q^7+ q^6 - q^5 - q + 1  & 4 \\
10 &  q^{20} - q^{19} - q^{11} + 2q^{10} -  q^9 - q + 1  & 8 \\
11 &  q^{22} - q^{21} - q^{16} + q^{15} + q^7 - q^6 - q + 1  & 0 \\
12 &  q^{24} - q^{23} + q^{15} - q^{14} -  q^{10} + q^9 - q + 1  & 0 \\
)"},
        {2, R"(
1 & 1 & 1 & 1 & 1 & 1 & 1 \\
2 & q^2 + q + 1 & 3 & 1 & 0 & 1 & 1 \\
3 & q^4 + q^3 + q + 1 & 4 & 0 & 2 & 2 & 0 \\
4 & q^6 + q^5+ q^4 + q^3 + q^2 + q + 1 & 7 & 1 & 1 & 1 & 1 \\
5 & q^8 + q^7+ q^6 + q^2 + q + 1 & 6 & 2 & 0 & 0 & 0 \\
 & q^{10} + q^9 + q^8 + q^7+ q^6  &  &  &  &  & \\
6 & + 2q^5+ q^4 + q^3 + q^2 + q + 1& 12 & 0 & 0 & 2 & 2 \\
7 &  q^{12} + q^{11} + q^{10} + q^9 + q^3 + q^2 + q + 1 & 8 & 0 & 2 & 0 & 0 \\
 &  q^{14} + q^{13} + q^{12} + q^{11} + q^{10} + q^9 + q^8   &  &  &  & & \\
8 &  + q^7 + q^6 + q^5+ q^4 + q^3 + q^2 + q + 1 & 15 & 1 & 0 & 1 & 1\\
 &  q^{16} + q^{15}+ q^{14} + q^{13} + q^{12} + q^9    &  & &  &  & \\
9 &  + q^8 + q^7+ q^4 + q^3 + q^2 + q + 1  & 13 & 1 & 2 & 3 & 1 \\
 &  q^{18} + q^{17}+ q^{16} + q^{15}+ q^{14} + q^{13}   &  & &  &  & \\
  &  + q^{12} + q^{11}  + q^{10} + q^8 + q^7+ q^6   &  & &  &  & \\
10 &   + q^5 + q^4 + q^3 + q^2 + q + 1  & 18 & 2 & 0 & 0 & 0 \\
 &  q^{20} + q^{19}+ q^{18} + q^{17}+ q^{16} + q^{15}    &  & &  &  & \\
11 &   + q^5 + q^4 + q^3 + q^2 + q + 1  & 12 & 0 & 0 & 2 & 0 \\
 &  q^{22} + q^{21}+ q^{20} + q^{19}+ q^{18} + q^{17}  + q^{16} + q^{15} &  & &  &  & \\
 &  + q^{14} + 2 q^{13} + 2 q^{12} +  2q^{11}  + 2q^{10}  + 2 q^9 + q^8  &  & &  &  & \\
12 &   + q^7+ q^6 + q^5 + q^4 + q^3 + q^2 + q + 1  & 28 & 0 & 2 & 2 & 2 \\
)"},
        {3, R"(
1 & 1 & 1 & 1 \\
2 & q+1 & 2 & 0 \\
3 & q^2+q & 2 & 0 \\
4 & q^3 + q^2+q & 3 & -1 \\
5 & q^4 + q^3 + q^2 - 1 & 2 & 0 \\
6 & q^5 + q^4 + q^3 + q^2 & 4 & 0 \\
7 &  q^6 + q^5 + q^4 + q^3 - q - 1 & 2 & 0 \\
8 &  q^7 + q^6 + q^5 + q^4 + q^3 - q & 4 & 0 \\
9 &  q^8 + q^7 + q^6 + q^5 + q^4 - q^2 - q & 3 & 1 \\
10 &  q^9 + q^8 + q^7 + q^6 + q^5 + q^4 - q^2 - q & 4 & 0 \\
11 &  q^{10} + q^9 + q^8 + q^7 + q^6 + q^5 - q^3 - 2q^2 - q & 2 & 0 \\
12 &  q^{11} + q^{10} + q^9 + q^8 + q^7 + q^6 + q^5 - q^3 - q^2 + 1 & 6 & 0 \\
)"},
        {4, R"(
1 & q^2 & 1 & 1 \\
2 & q^4 + q^3 & 2 & 0 \\
3 & q^6 + q^5 + q^4 & 3 & 1 \\
4 & q^8 + q^7+ 2q^6 + q^5 & 5 & 1 \\
5 & q^{10} + q^9+ 2q^8 + 2q^7+ q^6 & 7 & 1 \\
6 & q^{12} + q^{11} + 2q^{10} + 3q^9+ 3q^8 + q^7 & 11 & 1 \\
7 &  q^{14} + q^{13} + 2q^{12} + 3q^{11} + 4q^{10} + 3q^9+ q^8 & 15 & 1 \\
8 &  q^{16} + q^{15} + 2q^{14} + 3q^{13} + 5q^{12} + 5q^{11} + 4q^{10} + q^9 & 22 & 2 \\
 &  q^{18} + q^{17} + 2q^{16} + 3q^{15} +  &  &  \\
9 &  + 5q^{14} + 6q^{13} + 7q^{12} + 4q^{11} + q^{10} & 30 & 2 \\
 &  q^{20} + q^{19} + 2q^{18} + 3q^{17} + 5q^{16} +  &  &  \\
10 &  + 7q^{15} + 9q^{14} + 8q^{13} + 5q^{12} + q^{11} & 42 & 2 \\
 &  q^{22} + q^{21} +  2q^{20} + 3q^{19} + 5q^{18} +  &  &  \\
11 &  + 7q^{17} + 10q^{16} + 11q^{15} + 10q^{14} + 5q^{13} + q^{12} & 56 & 2 \\
 &   q^{24} + q^{23} +  2q^{22} + 3q^{21} +  5q^{20} + 7q^{19} +   &  &  \\
12 &  + 11q^{18} + 13q^{17} + 15q^{16} + 12q^{15} + 6q^{14} + q^{13} & 77 & 3 \\
)"},
        {6, R"(
|a_2(n)| & 4 & 4 & 0 & 4 & 8 & 0 & 0 & 4 & 4 & 8 & 0 & 0 & 8 & 0 & 0 & 4 & 8 & 4 \\
|a_3(n)| & 3 & 0 & 6 & 3 & 0 & 0 & 6 & 0 & 6 & 0 & 0 & 6 & 6 & 0 & 0 & 3 & 0 & 0\\
|a_4(n)| & 2 & 2 & 4 & 2 & 0 & 4 & 0 & 2 & 6 & 0 & 4 & 4 & 0 & 0 & 0 & 2 & 4 & 6 \\
|a_6(n)| & 1 & 2 & 0 & 1 & 4 & 0 & 0 & 2 & 4 & 2 & 0 & 0 & 2 & 0 & 0 & 1 & 4 & 4\\
)"},
        {7, R"(
s_2(n) & 1 &  2 & 2 & 4 & 4 & 6 & 4 & 8 & 7 & 10 & 6 & 14 & 7 & 12 & 12 & 16 & 10 & 20 \\
s_3(n) & 1 & 1 & 2 & 3 & 2 & 4 & 4 & 5 & 5 & 6 & 4 & 10 & 6 & 8 & 8 & 11 & 6 & 13 \\
s_4(n) & 1 & 1 & 2 & 2 & 2 & 3 & 2 & 4 & 5 & 5 & 4 & 7 & 4 & 6 & 6 & 8 & 6 & 10 \\
s_6(n) & 1 & 1 & 1 & 2 & 2 & 2 & 2 & 3 & 2 & 4 & 2 & 5 & 4 & 4 & 4 & 6 & 4 & 6 \\
)"},
    };
    return bodies;
}

} // namespace reference
