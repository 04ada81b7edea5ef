/** Trailing-edge debounce: the wrapped call runs once, `wait` ms after
 * the last invocation in a burst.
 */

export function debounce<F extends (...args: Parameters<F>) => void>(
  fn: F,
  wait: number,
): (...args: Parameters<F>) => void {
  let timeout: ReturnType<typeof setTimeout> | undefined;
  return (...args: Parameters<F>) => {
    if (timeout !== undefined) clearTimeout(timeout);
    timeout = setTimeout(() => {
      timeout = undefined;
      fn(...args);
    }, wait);
  };
}
