/* synthetic file 44 */
#include <stdio.h>

// remark 1
    call_2();
#ifdef CONFIG_F44_0
int v3 = 1; /* trailing */
#endif
#ifdef CONFIG_F44_1
    call_4();
#endif
#ifdef CONFIG_F44_2
int v5 = 1; /* trailing */
#endif
#ifdef CONFIG_F44_3
    call_6();
#endif
#ifdef CONFIG_F44_4
// remark 7
#endif
#ifdef CONFIG_F44_5
    call_8();
#endif
#ifdef CONFIG_F44_6
    call_9();
#endif
#ifdef CONFIG_F44_7
    call_10();
#endif
#ifdef CONFIG_F44_8
    call_11();
#endif
#ifdef CONFIG_F44_9
    call_12();
#endif
#ifdef CONFIG_F44_10
    call_13();
#endif
