package dlib;

import java.io.*;

public class windowOutputStream extends OutputStream
{
    private StringBuffer pending;
    private boolean open;

    public windowOutputStream ()
    {
        pending = new StringBuffer();
        open = true;
    }

    public void write (int b)
    {
        if (open)
        {
            pending.append((char) b);
        }
    }

    public void flush ()
    {
        if (!open)
        {
            return;
        }
        pending.setLength(0);
    }

    public void close ()
    {
        flush();
        open = false;
    }

    public String window ()
    {
        return( pending.toString() );
    }
}
