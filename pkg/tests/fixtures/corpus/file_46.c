/* synthetic file 46 */
#include <stdio.h>

    call_1();
/* note 2 */
#if defined(CONFIG_F46_0) && \
    (CONFIG_F46_5 || 0)
#ifndef CONFIG_F46_7
#if defined(CONFIG_F46_4)
/* note 3 */
#elif !(defined(CONFIG_F46_1)) || (defined(CONFIG_F46_0) || defined(CONFIG_F46_7))
    call_4();
#if (defined(CONFIG_F46_7) || defined CONFIG_F46_0 || defined CONFIG_F46_0) || !(defined(CONFIG_F46_8))
// remark 5
    call_6();
#elif defined(CONFIG_F46_3) || CONFIG_F46_3
/* note 7 */
/* note 8 */
#elif CONFIG_F46_9
    call_9();
#endif
#if (defined(CONFIG_F46_5) || defined(CONFIG_F46_8) || defined(CONFIG_F46_0)) && defined(CONFIG_F46_4) && (defined(CONFIG_F46_3) || defined(CONFIG_F46_9) || defined CONFIG_F46_0)
    call_10();
    call_11();
#elif !(defined(CONFIG_F46_0)) || (defined(CONFIG_F46_3) || defined(CONFIG_F46_7))
int v12 = 1; /* trailing */
    call_13();
// remark 14
#elif defined(CONFIG_F46_2)
    call_15();
    call_16();

    call_18();
#endif /* guard */
#elif CONFIG_F46_4
#if CONFIG_F46_5
    call_19();
#else
    call_20();
    call_21();

#endif /* guard */
#if !defined(CONFIG_F46_0)
    call_23();
    call_24();
// remark 25
#elif (defined(CONFIG_F46_0) || CONFIG_F46_3 || defined(CONFIG_F46_7)) && defined(CONFIG_F46_6) && defined CONFIG_F46_7
/* note 26 */
    call_27();
#endif
#endif
#else
    call_28();
// remark 29
    call_30();
#endif /* guard */
    call_31();
    call_32();
#elif defined(CONFIG_F46_1)
#ifdef CONFIG_F46_8
#ifdef CONFIG_F46_9
#ifndef CONFIG_F46_6
    call_33();
#elif !(defined(CONFIG_F46_5))
    call_34();
    call_35();
    call_36();
    call_37();
#endif
/* note 38 */
#if defined(CONFIG_F46_4)
/* note 39 */
    call_40();
// remark 41
#elif (defined CONFIG_F46_1 && defined(CONFIG_F46_4) && CONFIG_F46_7) && (defined(CONFIG_F46_4) && defined CONFIG_F46_2 && defined CONFIG_F46_1)
    call_42();
    call_43();
#elif defined(CONFIG_F46_1) || CONFIG_F46_9
    call_44();
    call_45();
    call_46();

#endif
#elif (!defined(CONFIG_F46_9) || defined(CONFIG_F46_2)) || defined(CONFIG_F46_9) || (defined CONFIG_F46_7 && defined(CONFIG_F46_6))
    call_48();
    call_49();
#ifndef CONFIG_F46_5
    call_50();
/* note 51 */
    call_52();
#elif !defined(CONFIG_F46_9)
    call_53();

    call_55();
    call_56();
#else
    call_57();
#endif
#ifdef CONFIG_F46_5
/* note 58 */
    call_59();
    call_60();
#elif (!defined(CONFIG_F46_2) || defined(CONFIG_F46_4) || defined(CONFIG_F46_6)) && defined CONFIG_F46_7 && !defined(CONFIG_F46_9)
    call_61();
#endif
#endif
    call_62();
#if defined(CONFIG_F46_9) || CONFIG_F46_7 || (defined CONFIG_F46_1 || CONFIG_F46_4)
#ifndef CONFIG_F46_8
    call_63();
// remark 64
/* note 65 */
    call_66();
#endif
    call_67();
#if !(!(defined(CONFIG_F46_8)))
    call_68();
    call_69();
    call_70();
    call_71();
#endif
    call_72();
#endif /* guard */
#elif (defined(CONFIG_F46_2) || !defined(CONFIG_F46_9) || CONFIG_F46_4) || (1 || CONFIG_F46_3) || (defined(CONFIG_F46_6) && CONFIG_F46_4 && 1)
#ifndef CONFIG_F46_5
#if defined CONFIG_F46_1
    call_73();
#elif !((defined(CONFIG_F46_5) || defined CONFIG_F46_4 || 1))
    call_74();

#endif
    call_76();
#if defined(CONFIG_F46_4) && CONFIG_F46_2 && !(defined CONFIG_F46_9)
    call_77();
    call_78();
    call_79();
#endif
#elif (defined CONFIG_F46_1 && defined(CONFIG_F46_3) && !defined(CONFIG_F46_0)) || defined(CONFIG_F46_5)
    call_80();
int v81 = 1; /* trailing */
    call_82();
#elif defined(CONFIG_F46_8) && (!defined(CONFIG_F46_5) || defined(CONFIG_F46_0) || defined CONFIG_F46_0)
// remark 83
#endif
int v84 = 1; /* trailing */
#endif
#ifndef CONFIG_F46_1
/* note 85 */
    call_86();
// remark 87
#elif defined(CONFIG_F46_7) && defined CONFIG_F46_8 && !(defined(CONFIG_F46_2))
    call_88();

#ifndef CONFIG_F46_4
    call_90();
#elif 1
#if defined(CONFIG_F46_2)
    call_91();
    call_92();
    call_93();
    call_94();
#elif !(!(defined CONFIG_F46_4))
    call_95();
#endif
#if defined(CONFIG_F46_6)
    call_96();
#elif defined(CONFIG_F46_7) && (defined CONFIG_F46_1 || defined(CONFIG_F46_9) || defined(CONFIG_F46_8)) && (defined(CONFIG_F46_7) || defined(CONFIG_F46_0) || defined CONFIG_F46_0)
    call_97();
    call_98();

#elif !(!(1))
// remark 100
    call_101();
    call_102();
#endif
    call_103();
#if !(CONFIG_F46_9)
    call_104();
int v105 = 1; /* trailing */
    call_106();
#endif
#else
    call_107();
    call_108();
#ifndef CONFIG_F46_8
    call_109();
    call_110();
    call_111();
#elif !((defined(CONFIG_F46_4) && defined(CONFIG_F46_8) && defined(CONFIG_F46_0)))
/* note 112 */
    call_113();
/* note 114 */
    call_115();
#endif
#endif /* guard */
#endif
#ifndef CONFIG_F46_4
    call_116();
#if (defined(CONFIG_F46_7) || defined(CONFIG_F46_6)) && \
    (defined(CONFIG_F46_3) || CONFIG_F46_3)
#ifdef CONFIG_F46_2
    call_117();
// remark 118
    call_119();
#endif
#if CONFIG_F46_3
    call_120();
    call_121();
    call_122();
    call_123();
#elif defined CONFIG_F46_9 && !(defined CONFIG_F46_8)
    call_124();
    call_125();
#else
    call_126();

#endif
    call_128();
#if !(1)
int v129 = 1; /* trailing */
#else
    call_130();
#endif
#elif (defined(CONFIG_F46_8) || defined CONFIG_F46_9) && (defined CONFIG_F46_2 || !defined(CONFIG_F46_6))
    call_131();
#else
#ifdef CONFIG_F46_6
    call_132();
    call_133();
/* note 134 */

#endif
    call_136();
#endif
#endif
#elif defined(CONFIG_F46_5)
#ifndef CONFIG_F46_8
#if !defined(CONFIG_F46_5) && (defined(CONFIG_F46_7) && defined(CONFIG_F46_8) && defined(CONFIG_F46_3)) && (0 && defined(CONFIG_F46_1))
#ifndef CONFIG_F46_5

    call_138();
    call_139();
#elif (defined(CONFIG_F46_1) && CONFIG_F46_1) && !(CONFIG_F46_7)
    call_140();
    call_141();
#elif (1 || CONFIG_F46_9) || CONFIG_F46_9
    call_142();
#else
    call_143();
#endif
#ifdef CONFIG_F46_8
/* note 144 */
    call_145();
    call_146();
#elif !(defined(CONFIG_F46_4)) || !defined(CONFIG_F46_5)
/* note 147 */
#elif defined(CONFIG_F46_6)
    call_148();
#endif /* guard */
#ifdef CONFIG_F46_7
    call_149();
#elif defined CONFIG_F46_2
    call_150();
    call_151();
// remark 152
#else
    call_153();
    call_154();
    call_155();
    call_156();
#endif
#elif !((defined(CONFIG_F46_3) && 0 && CONFIG_F46_6))

#elif CONFIG_F46_8
#ifdef CONFIG_F46_0
int v158 = 1; /* trailing */
    call_159();
    call_160();
int v161 = 1; /* trailing */
#else
    call_162();
#endif
#else
    call_163();
#endif
    call_164();
#ifdef CONFIG_F46_1
/* note 165 */
    call_166();
#else
#ifndef CONFIG_F46_4
    call_167();
    call_168();
    call_169();
    call_170();
#elif !(CONFIG_F46_5) && (CONFIG_F46_9 && !defined(CONFIG_F46_7) && defined(CONFIG_F46_5)) && !(!defined(CONFIG_F46_0))
    call_171();
#endif
    call_172();
#endif
#endif
    call_173();
#endif
#ifdef CONFIG_F46_0
    call_174();
#endif
#ifdef CONFIG_F46_1
    call_175();
#endif
#ifdef CONFIG_F46_2
    call_176();
#endif
#ifdef CONFIG_F46_3
    call_177();
#endif
#ifdef CONFIG_F46_4

#endif
#ifdef CONFIG_F46_5
    call_179();
#endif
#ifdef CONFIG_F46_6
    call_180();
#endif
#ifdef CONFIG_F46_7
    call_181();
#endif
#ifdef CONFIG_F46_8
// remark 182
#endif
#ifdef CONFIG_F46_9
// remark 183
#endif
