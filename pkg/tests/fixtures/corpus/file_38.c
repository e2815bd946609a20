/* synthetic file 38 */
#include <stdio.h>

#if defined(CONFIG_F38_3) || (defined(CONFIG_F38_0) || defined(CONFIG_F38_0) || defined(CONFIG_F38_1)) || defined CONFIG_F38_2

#ifndef CONFIG_F38_2
    call_2();
#ifndef CONFIG_F38_4
#if defined(CONFIG_F38_7)

/* note 4 */
#endif
    call_5();
#else
#if CONFIG_F38_2
    call_6();

    call_8();
    call_9();
#elif !(!(!defined(CONFIG_F38_0)))
    call_10();
    call_11();
#elif (CONFIG_F38_0 || defined(CONFIG_F38_6)) || defined(CONFIG_F38_1)
// remark 12
    call_13();
    call_14();

#endif
#endif
    call_16();
#else
    call_17();
#endif
#endif
#ifndef CONFIG_F38_1
    call_18();
/* note 19 */
#elif defined(CONFIG_F38_3)
#if !((defined(CONFIG_F38_1) && defined(CONFIG_F38_4)))
    call_20();
    call_21();
#elif (defined(CONFIG_F38_6) && defined CONFIG_F38_6) || !(defined(CONFIG_F38_6)) || !defined(CONFIG_F38_5)
    call_22();
#if !defined(CONFIG_F38_2)
#if 1
/* note 23 */
    call_24();
#elif defined(CONFIG_F38_1)
    call_25();
    call_26();
#else
    call_27();
    call_28();
    call_29();
#endif
    call_30();
#if defined(CONFIG_F38_1)

    call_32();
    call_33();
#endif /* guard */
#ifdef CONFIG_F38_3
int v34 = 1; /* trailing */
#endif /* guard */
#elif 0

int v36 = 1; /* trailing */
    call_37();
/* note 38 */
#else
/* note 39 */
#endif
#elif defined(CONFIG_F38_3)
#ifndef CONFIG_F38_3
    call_40();
#elif !(defined CONFIG_F38_1) && !(defined(CONFIG_F38_0))
    call_41();
#ifndef CONFIG_F38_6
    call_42();

    call_44();
    call_45();
#elif CONFIG_F38_5
/* note 46 */
    call_47();
    call_48();
    call_49();
#elif CONFIG_F38_7
    call_50();
#endif
#endif
#if defined(CONFIG_F38_2) || (0 && defined(CONFIG_F38_7) && defined(CONFIG_F38_0))
    call_51();
    call_52();
    call_53();
#elif (defined(CONFIG_F38_6) && CONFIG_F38_6) && (defined(CONFIG_F38_7) || defined(CONFIG_F38_3))
#ifndef CONFIG_F38_4

    call_55();
#endif
#if 1

    call_57();
    call_58();
#elif defined(CONFIG_F38_3)
// remark 59
    call_60();
// remark 61
/* note 62 */
#elif defined(CONFIG_F38_6)
    call_63();
// remark 64
#endif
    call_65();
#elif CONFIG_F38_0 && !(!defined(CONFIG_F38_2)) && !(defined(CONFIG_F38_7))
#ifdef CONFIG_F38_0
int v66 = 1; /* trailing */
    call_67();
#elif CONFIG_F38_2
/* note 68 */
    call_69();
    call_70();
#elif !(defined(CONFIG_F38_1)) && (defined(CONFIG_F38_5) || defined CONFIG_F38_5)
    call_71();

#endif /* guard */
    call_73();
/* note 74 */

#endif
    call_76();
    call_77();
#else
    call_78();


#endif
#else
    call_81();
#endif
#if CONFIG_F38_5 || (0 || defined(CONFIG_F38_7) || defined CONFIG_F38_5) || defined(CONFIG_F38_5)
/* note 82 */

#ifndef CONFIG_F38_4
    call_84();
#ifndef CONFIG_F38_3
    call_85();
#if (!defined(CONFIG_F38_3) && defined CONFIG_F38_7 && 1) || !(!defined(CONFIG_F38_0)) || (CONFIG_F38_6 && defined(CONFIG_F38_6) && defined(CONFIG_F38_1))
    call_86();
#elif (defined(CONFIG_F38_1) && defined CONFIG_F38_0) || defined(CONFIG_F38_4) || !defined(CONFIG_F38_7)
    call_87();
    call_88();

#elif defined(CONFIG_F38_4)
    call_90();
#endif /* guard */
#ifndef CONFIG_F38_2
    call_91();
    call_92();
#elif !((!defined(CONFIG_F38_1) || 1))
    call_93();
#else

#endif /* guard */
#elif defined CONFIG_F38_4 && (defined(CONFIG_F38_1) || CONFIG_F38_0 || !defined(CONFIG_F38_6)) && (!defined(CONFIG_F38_7) || CONFIG_F38_5)
#ifndef CONFIG_F38_5
    call_95();
    call_96();
    call_97();
    call_98();
#endif
#else
#if 0 || !defined(CONFIG_F38_2) || defined(CONFIG_F38_5)
    call_99();
    call_100();

#elif defined(CONFIG_F38_1)
// remark 102
    call_103();
#endif /* guard */

#endif
#else
int v105 = 1; /* trailing */
#endif
    call_106();
#elif defined(CONFIG_F38_1)
/* note 107 */
/* note 108 */
#if 1 && (defined(CONFIG_F38_2) || defined CONFIG_F38_1 || defined(CONFIG_F38_5))
#if 0
    call_109();
#elif defined(CONFIG_F38_3) && defined CONFIG_F38_3 && !defined(CONFIG_F38_7)
#ifdef CONFIG_F38_0

    call_111();
    call_112();
    call_113();
#elif !((1 && defined(CONFIG_F38_4)))
    call_114();
    call_115();
#elif !(defined CONFIG_F38_4)
    call_116();
#endif
    call_117();
#else
#if defined CONFIG_F38_7
    call_118();
    call_119();
    call_120();
    call_121();
#endif
    call_122();

    call_124();
#endif /* guard */
#if (defined CONFIG_F38_1 || CONFIG_F38_0 || defined(CONFIG_F38_6)) || (defined CONFIG_F38_2 && defined CONFIG_F38_1) || (defined CONFIG_F38_4 && defined(CONFIG_F38_4) && defined(CONFIG_F38_1))
    call_125();
/* note 126 */
#elif !((1 && CONFIG_F38_6 && 0))
// remark 127
#elif (defined CONFIG_F38_1 || 0 || defined(CONFIG_F38_6)) || (1 && CONFIG_F38_0)
#if CONFIG_F38_2 && 0
    call_128();
    call_129();
    call_130();
    call_131();
#else
    call_132();
    call_133();
    call_134();
#endif
#endif /* guard */
#elif !((defined(CONFIG_F38_4) && defined(CONFIG_F38_7) && defined(CONFIG_F38_0)))
#if 1
#if defined CONFIG_F38_5
    call_135();
int v136 = 1; /* trailing */

#endif
#elif defined(CONFIG_F38_6) && (defined(CONFIG_F38_1) && defined CONFIG_F38_1 && defined(CONFIG_F38_6)) && (defined CONFIG_F38_1 || defined(CONFIG_F38_3))
/* note 138 */
#if defined(CONFIG_F38_0) && defined CONFIG_F38_3 && (defined(CONFIG_F38_7) && defined(CONFIG_F38_6))
    call_139();
int v140 = 1; /* trailing */
    call_141();
int v142 = 1; /* trailing */
#elif defined(CONFIG_F38_4) && (defined CONFIG_F38_2 && defined(CONFIG_F38_5) && 1) && (0 && 1 && defined CONFIG_F38_3)
    call_143();
// remark 144
/* note 145 */
    call_146();
#endif
/* note 147 */
    call_148();
#endif /* guard */
#endif
#endif
#ifdef CONFIG_F38_0
    call_149();
#endif
#ifdef CONFIG_F38_1
    call_150();
#endif
#ifdef CONFIG_F38_2
    call_151();
#endif
#ifdef CONFIG_F38_3
    call_152();
#endif
#ifdef CONFIG_F38_4
    call_153();
#endif
#ifdef CONFIG_F38_5
    call_154();
#endif
#ifdef CONFIG_F38_6
    call_155();
#endif
#ifdef CONFIG_F38_7
    call_156();
#endif
