/* core scheduling entry */
void core(void)
{
#if defined(CONFIG_SMP) || defined(CONFIG_SCHED)
	schedule();
#else
	idle();
#endif
#ifdef CONFIG_GHOST_TWO
	ghost_two();
#endif
}
