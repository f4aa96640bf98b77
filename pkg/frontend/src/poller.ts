// Fixed-interval polling loop for daemon state. Skips a tick while the
// previous poll is still in flight so a slow daemon never stacks requests.

export class StatePoller {
  private timer?: ReturnType<typeof setInterval>;
  private inFlight = false;

  constructor(
    private readonly poll: () => Promise<void>,
    private readonly intervalMs = 1000,
  ) {}

  start(): void {
    if (this.timer) return;
    this.timer = setInterval(() => void this.tick(), this.intervalMs);
  }

  stop(): void {
    if (this.timer) {
      clearInterval(this.timer);
      this.timer = undefined;
    }
  }

  get active(): boolean {
    return this.timer !== undefined;
  }

  private async tick(): Promise<void> {
    if (this.inFlight) return;
    this.inFlight = true;
    try {
      await this.poll();
    } catch {
      // transient failures are retried on the next tick
    } finally {
      this.inFlight = false;
    }
  }
}
